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

#include "hplp/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hplp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

PartitionEstimate partition_estimate_from_reduced_costs(
    const Iterate& z, const Vector& reduced_costs, double tol_active,
    double sigma_estimate) {
  PartitionEstimate p;
  p.tol_active = tol_active;
  const double r_tol = tol_active * sigma_estimate;
  for (Index i = 0; i < reduced_costs.size(); ++i) {
    const double r = reduced_costs[i];
    if (r > r_tol) {
      p.n_set.push_back(i);
    } else if (std::abs(r) <= r_tol && z.x[i] > tol_active) {
      p.b1_set.push_back(i);
    } else {
      p.b2_set.push_back(i);
    }
  }
  return p;
}

PartitionEstimate partition_estimate(const Iterate& z, const StandardFormLP& lp,
                                     double tol_active, double sigma_estimate) {
  const Vector reduced = lp.c + spmv_transpose(lp.a, z.y);
  return partition_estimate_from_reduced_costs(z, reduced, tol_active,
                                               sigma_estimate);
}

PartitionEstimate partition_estimate(const Iterate& z, const StandardFormLP& lp,
                                     double tol_active) {
  return partition_estimate(z, lp, tol_active, estimate_spectral_norm(lp.a));
}

double compute_delta(const Iterate& z_star, const PartitionEstimate& p,
                     const StandardFormLP& lp, double sigma_estimate) {
  const Vector reduced = lp.c + spmv_transpose(lp.a, z_star.y);
  double delta = kInf;
  for (Index i : p.n_set) {
    delta = std::min(delta, reduced[i] / sigma_estimate);
  }
  for (Index i : p.b1_set) {
    delta = std::min(delta, z_star.x[i]);
  }
  return delta;
}

double compute_delta(const Iterate& z_star, const PartitionEstimate& p,
                     const StandardFormLP& lp) {
  return compute_delta(z_star, p, lp, estimate_spectral_norm(lp.a));
}

DisplacementPartition compute_delta_v(const CertificateCandidate& v,
                                      const StandardFormLP& lp, double tol,
                                      double sigma_estimate) {
  DisplacementPartition part;
  const Vector at_vy = spmv_transpose(lp.a, v.v_y);
  for (Index i = 0; i < lp.num_cols(); ++i) {
    if (v.v_x[i] > tol) {
      part.b_set.push_back(i);
    } else if (at_vy[i] > tol) {
      part.n2_set.push_back(i);
    } else {
      part.n1_set.push_back(i);
    }
  }
  double delta = kInf;
  for (Index i : part.b_set) delta = std::min(delta, v.v_x[i]);
  for (Index i : part.n2_set) delta = std::min(delta, at_vy[i] / sigma_estimate);
  part.delta_v = delta;
  return part;
}

DisplacementPartition compute_delta_v(const CertificateCandidate& v,
                                      const StandardFormLP& lp, double tol) {
  return compute_delta_v(v, lp, tol, estimate_spectral_norm(lp.a));
}

std::optional<long> identification_iteration(
    const std::vector<TraceRecord>& trace, const PartitionEstimate& oracle) {
  if (trace.empty()) return std::nullopt;
  auto matches = [&oracle](const TraceRecord& rec) {
    return rec.partition.n_set == oracle.n_set &&
           rec.partition.b1_set == oracle.b1_set;
  };
  // Scan backwards for the last mismatch.
  std::size_t first_stable = 0;
  for (std::size_t i = trace.size(); i-- > 0;) {
    if (!matches(trace[i])) {
      first_stable = i + 1;
      break;
    }
  }
  if (first_stable >= trace.size()) return std::nullopt;
  return trace[first_stable].iteration;
}

double measure_sharpness(const Iterate& z, const StandardFormLP& lp,
                         const CanonicalNorm& nrm, StepSize step,
                         const std::vector<Iterate>& oracle_optimal_set) {
  double dist = kInf;
  for (const Iterate& z_star : oracle_optimal_set) {
    dist = std::min(dist, canonical_norm(z - z_star, nrm));
  }
  if (!(dist > 0.0)) return kInf;
  return fixed_point_residual(z, lp, step, nrm) / dist;
}

}  // namespace hplp
