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

#include "hplp/infeasibility.hpp"

#include <cmath>
#include <stdexcept>

namespace hplp {

namespace {
double inf_norm(const Vector& v) {
  return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
}
}  // namespace

std::pair<CertificateCandidate, CertificateCandidate> extract_candidates(
    const Iterate& z_k, const Iterate& z_0, const Iterate& t_z_k, long k) {
  if (k < 1) {
    throw std::invalid_argument("extract_candidates: k must be >= 1");
  }
  const double scale = 2.0 / static_cast<double>(k);
  CertificateCandidate normalized{scale * (z_k.x - z_0.x),
                                  scale * (z_k.y - z_0.y),
                                  CandidateSource::kNormalizedIterate, k};
  CertificateCandidate difference{t_z_k.x - z_k.x, t_z_k.y - z_k.y,
                                  CandidateSource::kIterateDifference, k};
  return {std::move(normalized), std::move(difference)};
}

FarkasReport validate_primal_infeasibility(const Vector& v_y,
                                           const StandardFormLP& lp, double tol,
                                           double sigma_estimate) {
  FarkasReport report;
  const double n2 = v_y.norm();
  if (n2 == 0.0 || !v_y.allFinite()) return report;
  const Vector u = v_y / n2;
  const double threshold = tol * std::max(1.0, inf_norm(u) * sigma_estimate);
  const Vector at_u = spmv_transpose(lp.a, u);
  const double b_norm = lp.b.norm();
  for (double s : {1.0, -1.0}) {
    const double residual = inf_norm((s * at_u).cwiseMax(0.0));
    const double margin = s * lp.b.dot(u);
    const bool ok =
        residual <= threshold && margin > 0.0 && margin >= tol * b_norm;
    if (ok || (!report.primal_valid && residual < report.primal_cert_residual)) {
      report.primal_cert_residual = residual;
      report.primal_margin = margin;
      report.primal_orientation = s > 0 ? Orientation::kAsIs : Orientation::kNegated;
    }
    if (ok) {
      report.primal_valid = true;
      break;
    }
  }
  return report;
}

FarkasReport validate_primal_infeasibility(const Vector& v_y,
                                           const StandardFormLP& lp,
                                           double tol) {
  return validate_primal_infeasibility(v_y, lp, tol,
                                       estimate_spectral_norm(lp.a));
}

FarkasReport validate_dual_infeasibility(const Vector& v_x,
                                         const StandardFormLP& lp, double tol,
                                         double sigma_estimate) {
  FarkasReport report;
  const double n2 = v_x.norm();
  if (n2 == 0.0 || !v_x.allFinite()) return report;
  const Vector u = v_x / n2;
  const double threshold = tol * std::max(1.0, inf_norm(u) * sigma_estimate);
  const double nonneg_threshold = tol * std::max(1.0, inf_norm(u));
  const Vector a_u = spmv(lp.a, u);
  const double margin_threshold = -tol * std::max(1.0, lp.c.norm());
  for (double s : {1.0, -1.0}) {
    const double ray_residual = inf_norm(s * a_u);
    const double sign_residual = inf_norm((-s * u).cwiseMax(0.0));
    const double residual = std::max(ray_residual, sign_residual);
    const double margin = s * lp.c.dot(u);
    const bool ok = ray_residual <= threshold &&
                    sign_residual <= nonneg_threshold &&
                    margin <= margin_threshold;
    if (ok || (!report.dual_valid && residual < report.dual_cert_residual)) {
      report.dual_cert_residual = residual;
      report.dual_margin = margin;
      report.dual_orientation = s > 0 ? Orientation::kAsIs : Orientation::kNegated;
    }
    if (ok) {
      report.dual_valid = true;
      break;
    }
  }
  return report;
}

FarkasReport validate_dual_infeasibility(const Vector& v_x,
                                         const StandardFormLP& lp, double tol) {
  return validate_dual_infeasibility(v_x, lp, tol, estimate_spectral_norm(lp.a));
}

FeasibilityClass classify(
    const std::pair<CertificateCandidate, CertificateCandidate>& candidates,
    const StandardFormLP& lp, double tol, double sigma_estimate) {
  bool primal = false;
  bool dual = false;
  double largest = 0.0;
  for (const CertificateCandidate* cand :
       {&candidates.first, &candidates.second}) {
    largest = std::max(largest, std::sqrt(cand->v_x.squaredNorm() +
                                          cand->v_y.squaredNorm()));
    primal = primal ||
             validate_primal_infeasibility(cand->v_y, lp, tol, sigma_estimate)
                 .primal_valid;
    dual = dual || validate_dual_infeasibility(cand->v_x, lp, tol, sigma_estimate)
                       .dual_valid;
  }
  if (primal && dual) return FeasibilityClass::kPrimalDualInfeasible;
  if (primal) return FeasibilityClass::kPrimalInfeasible;
  if (dual) return FeasibilityClass::kDualInfeasible;
  return largest <= tol ? FeasibilityClass::kFeasible
                        : FeasibilityClass::kUndetermined;
}

FeasibilityClass classify(
    const std::pair<CertificateCandidate, CertificateCandidate>& candidates,
    const StandardFormLP& lp, double tol) {
  return classify(candidates, lp, tol, estimate_spectral_norm(lp.a));
}

}  // namespace hplp
