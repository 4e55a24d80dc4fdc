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

#include "hplp/pdhg_core.hpp"

#include <cmath>
#include <stdexcept>

namespace hplp {

StepSize::StepSize(double eta_in, double sigma_estimate) : eta(eta_in) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("StepSize: eta must be positive and finite");
  }
  if (sigma_estimate > 0.0 && eta > 1.0 / (2.0 * sigma_estimate) * (1 + 1e-12)) {
    throw std::invalid_argument(
        "StepSize: eta exceeds 1/(2 ||A||_2-estimate) = " +
        std::to_string(1.0 / (2.0 * sigma_estimate)));
  }
}

StepSize StepSize::largest_stable(double sigma_estimate) {
  if (sigma_estimate <= 0.0) return StepSize(1.0, 0.0);
  return StepSize(1.0 / (2.0 * sigma_estimate), sigma_estimate);
}

double canonical_norm_with_product(const Iterate& z, const Vector& a_zx,
                                   double eta) {
  const double q = z.x.squaredNorm() / eta - 2.0 * z.y.dot(a_zx) +
                   z.y.squaredNorm() / eta;
  if (q < 0.0) {
    const double scale = (z.x.squaredNorm() + z.y.squaredNorm()) / eta;
    if (q < -1e-9 * scale) {
      throw std::domain_error(
          "canonical norm: quadratic form is negative (eta too large for this "
          "matrix)");
    }
    return 0.0;
  }
  return std::sqrt(q);
}

double canonical_norm(const Iterate& z, const CanonicalNorm& nrm) {
  return canonical_norm_with_product(z, spmv(nrm.lp->a, z.x), nrm.eta);
}

KktError kkt_error_with_products(const Iterate& z, const StandardFormLP& lp,
                                 const Vector& a_x, const Vector& at_y) {
  KktError e;
  e.primal_residual = (a_x - lp.b).norm() / (1.0 + lp.b.norm());
  e.dual_residual =
      (-(lp.c + at_y)).cwiseMax(0.0).norm() / (1.0 + lp.c.norm());
  const double cx = lp.c.dot(z.x);
  const double by = lp.b.dot(z.y);
  e.gap_residual = std::abs(cx + by) / (1.0 + std::abs(cx) + std::abs(by));
  e.max_relative = std::max({e.primal_residual, e.dual_residual, e.gap_residual});
  return e;
}

KktError kkt_error(const Iterate& z, const StandardFormLP& lp) {
  return kkt_error_with_products(z, lp, spmv(lp.a, z.x),
                                 spmv_transpose(lp.a, z.y));
}

PdhgStepResult pdhg_step_with_products(const Iterate& z,
                                       const StandardFormLP& lp, StepSize step,
                                       const Vector& a_x, bool unconstrained) {
  const double eta = step.eta;
  PdhgStepResult r;
  r.at_y = spmv_transpose(lp.a, z.y);
  Vector x_next = z.x - eta * (r.at_y + lp.c);
  if (!unconstrained) x_next = x_next.cwiseMax(0.0);
  r.a_x_next = spmv(lp.a, x_next);
  Vector y_next = z.y + eta * (2.0 * r.a_x_next - a_x - lp.b);
  r.next = {std::move(x_next), std::move(y_next)};
  return r;
}

Iterate pdhg_step(const Iterate& z, const StandardFormLP& lp, StepSize step,
                  bool unconstrained) {
  return pdhg_step_with_products(z, lp, step, spmv(lp.a, z.x), unconstrained)
      .next;
}

double fixed_point_residual(const Iterate& z, const StandardFormLP& lp,
                            StepSize step, const CanonicalNorm& nrm) {
  const Vector a_x = spmv(lp.a, z.x);
  PdhgStepResult r = pdhg_step_with_products(z, lp, step, a_x);
  return canonical_norm_with_product(z - r.next, a_x - r.a_x_next, nrm.eta);
}

}  // namespace hplp
