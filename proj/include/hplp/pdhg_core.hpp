// Copyright 2026 The hplp authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HPLP_PDHG_CORE_HPP_
#define HPLP_PDHG_CORE_HPP_

#include "hplp/lp_model.hpp"
#include "hplp/sparse_matrix.hpp"

namespace hplp {

// Primal-dual pair z = (x, y).
struct Iterate {
  Vector x;
  Vector y;

  static Iterate zero(const StandardFormLP& lp) {
    return {Vector::Zero(lp.num_cols()), Vector::Zero(lp.num_rows())};
  }
};

inline Iterate operator+(const Iterate& a, const Iterate& b) {
  return {a.x + b.x, a.y + b.y};
}
inline Iterate operator-(const Iterate& a, const Iterate& b) {
  return {a.x - b.x, a.y - b.y};
}
inline Iterate operator*(double s, const Iterate& z) {
  return {s * z.x, s * z.y};
}
inline double l2_norm(const Iterate& z) {
  return std::sqrt(z.x.squaredNorm() + z.y.squaredNorm());
}
inline double linf_norm(const Iterate& z) {
  double nx = z.x.size() ? z.x.cwiseAbs().maxCoeff() : 0.0;
  double ny = z.y.size() ? z.y.cwiseAbs().maxCoeff() : 0.0;
  return std::max(nx, ny);
}

// Equal primal/dual step size eta <= 1/(2 ||A||_2-estimate), enforced at
// construction. The largest analyzed value is the default.
struct StepSize {
  double eta;

  // Throws std::invalid_argument unless 0 < eta <= 1/(2 sigma_estimate).
  StepSize(double eta_in, double sigma_estimate);

  // eta = 1/(2 sigma_estimate); eta = 1 for the zero matrix (sigma = 0).
  static StepSize largest_stable(double sigma_estimate);
};

// The quadratic norm induced by P_eta = [[I/eta, -A^T], [-A, I/eta]],
// positive definite for eta < 1/||A||_2.
struct CanonicalNorm {
  const StandardFormLP* lp;
  double eta;

  CanonicalNorm(const StandardFormLP& lp_in, StepSize step)
      : lp(&lp_in), eta(step.eta) {}
  CanonicalNorm(const StandardFormLP& lp_in, double eta_in)
      : lp(&lp_in), eta(eta_in) {}
};

// sqrt(x'x/eta - 2 y'Ax + y'y/eta), one spmv. Throws std::domain_error when
// the quadratic form is negative beyond rounding (eta too large).
double canonical_norm(const Iterate& z, const CanonicalNorm& nrm);

// Same form with A*z.x supplied by the caller; no spmv.
double canonical_norm_with_product(const Iterate& z, const Vector& a_zx,
                                   double eta);

struct KktError {
  double primal_residual = 0.0;  // ||Ax - b||_2 / (1 + ||b||_2)
  double dual_residual = 0.0;    // ||[-(c + A^T y)]^+||_2 / (1 + ||c||_2)
  double gap_residual = 0.0;     // |c'x + b'y| / (1 + |c'x| + |b'y|)
  double max_relative = 0.0;
};

KktError kkt_error(const Iterate& z, const StandardFormLP& lp);
KktError kkt_error_with_products(const Iterate& z, const StandardFormLP& lp,
                                 const Vector& a_x, const Vector& at_y);

// One PDHG iteration (the operator T):
//   x+ = proj_{>=0}(x - eta (A^T y + c))
//   y+ = y + eta (A (2 x+ - x) - b)
// The unconstrained flag skips the projection (bilinear saddle problems).
Iterate pdhg_step(const Iterate& z, const StandardFormLP& lp, StepSize step,
                  bool unconstrained = false);

struct PdhgStepResult {
  Iterate next;
  Vector a_x_next;  // A * next.x, reusable as the next iteration's cache
  Vector at_y;      // A^T * z.y, reusable for a KKT check at z
};

// The same step with A*z.x supplied by the caller. Exactly one spmv and one
// spmv_transpose; the y update uses 2*A*x+ - A*x so the cached and uncached
// paths produce identical arithmetic.
PdhgStepResult pdhg_step_with_products(const Iterate& z,
                                       const StandardFormLP& lp, StepSize step,
                                       const Vector& a_x,
                                       bool unconstrained = false);

// ||z - T(z)|| in the canonical norm; zero exactly at saddle points for
// feasible-bounded LP.
double fixed_point_residual(const Iterate& z, const StandardFormLP& lp,
                            StepSize step, const CanonicalNorm& nrm);

}  // namespace hplp

#endif  // HPLP_PDHG_CORE_HPP_
