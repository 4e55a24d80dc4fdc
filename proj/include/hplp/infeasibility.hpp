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

#ifndef HPLP_INFEASIBILITY_HPP_
#define HPLP_INFEASIBILITY_HPP_

#include <utility>

#include "hplp/pdhg_core.hpp"

namespace hplp {

enum class CandidateSource { kNormalizedIterate, kIterateDifference };

// Estimate of the infimal displacement vector v, recovered from Halpern
// iterates: either (2/k)(z^k - z^0) or T(z^k) - z^k.
struct CertificateCandidate {
  Vector v_x;
  Vector v_y;
  CandidateSource source = CandidateSource::kIterateDifference;
  long at_iteration = 0;
};

// Both estimators at inner iterate k of an epoch anchored at z_0.
// Requires k >= 1 and t_z_k = T(z_k).
std::pair<CertificateCandidate, CertificateCandidate> extract_candidates(
    const Iterate& z_k, const Iterate& z_0, const Iterate& t_z_k, long k);

enum class Orientation { kAsIs, kNegated };

// Outcome of Farkas validation. Candidates are scaled to unit l2 norm before
// testing, and both sign orientations are tried; certificates are rays, so
// validation must not depend on the candidate's magnitude.
struct FarkasReport {
  // Violation of {A^T y <= 0} for the best orientation of the primal
  // certificate, and of {A u = 0, u >= 0} for the dual certificate.
  double primal_cert_residual = std::numeric_limits<double>::infinity();
  double dual_cert_residual = std::numeric_limits<double>::infinity();
  double primal_margin = 0.0;  // b^T y of the oriented, normalized vector
  double dual_margin = 0.0;    // c^T u of the oriented, normalized vector
  Orientation primal_orientation = Orientation::kAsIs;
  Orientation dual_orientation = Orientation::kAsIs;
  bool primal_valid = false;
  bool dual_valid = false;
};

// Tests s*v_y, s in {+1,-1}, against {A^T y <= 0, b^T y > 0} after scaling
// v_y to unit norm. Valid iff ||[s A^T v]^+||_inf <= tol*max(1, ||v||_inf*sigma)
// and b^T (s v) >= tol*||v||_2*||b||_2 with a strictly positive margin.
// The zero vector is invalid, not an error.
FarkasReport validate_primal_infeasibility(const Vector& v_y,
                                           const StandardFormLP& lp, double tol,
                                           double sigma_estimate);
FarkasReport validate_primal_infeasibility(const Vector& v_y,
                                           const StandardFormLP& lp,
                                           double tol);

// Tests s*v_x against {A u = 0, u >= 0, c^T u < 0} (an unbounded primal ray
// certifying dual infeasibility), after scaling to unit norm.
FarkasReport validate_dual_infeasibility(const Vector& v_x,
                                         const StandardFormLP& lp, double tol,
                                         double sigma_estimate);
FarkasReport validate_dual_infeasibility(const Vector& v_x,
                                         const StandardFormLP& lp, double tol);

enum class FeasibilityClass {
  kFeasible,
  kPrimalInfeasible,
  kDualInfeasible,
  kPrimalDualInfeasible,
  kUndetermined,
};

// Runs both validators on both candidates and combines the verdicts.
// Near-zero candidates indicate the feasible case (v = 0); Undetermined never
// terminates the solver.
FeasibilityClass classify(
    const std::pair<CertificateCandidate, CertificateCandidate>& candidates,
    const StandardFormLP& lp, double tol);
FeasibilityClass classify(
    const std::pair<CertificateCandidate, CertificateCandidate>& candidates,
    const StandardFormLP& lp, double tol, double sigma_estimate);

}  // namespace hplp

#endif  // HPLP_INFEASIBILITY_HPP_
