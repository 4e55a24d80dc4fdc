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

#ifndef HPLP_DIAGNOSTICS_HPP_
#define HPLP_DIAGNOSTICS_HPP_

#include <optional>
#include <vector>

#include "hplp/infeasibility.hpp"
#include "hplp/pdhg_core.hpp"

namespace hplp {

// Active-set partition of the primal coordinates at (or near) an optimum:
// N  - reduced cost strictly positive (non-basic),
// B1 - reduced cost ~0, x strictly positive (non-degenerate basic),
// B2 - reduced cost ~0, x ~0 (degenerate basic).
struct PartitionEstimate {
  std::vector<Index> n_set;
  std::vector<Index> b1_set;
  std::vector<Index> b2_set;
  double tol_active = 1e-6;
};

inline constexpr double kDefaultActiveTol = 1e-6;

PartitionEstimate partition_estimate(const Iterate& z, const StandardFormLP& lp,
                                     double tol_active, double sigma_estimate);
PartitionEstimate partition_estimate(const Iterate& z, const StandardFormLP& lp,
                                     double tol_active = kDefaultActiveTol);
// Reduced costs supplied by the caller; no spmv.
PartitionEstimate partition_estimate_from_reduced_costs(
    const Iterate& z, const Vector& reduced_costs, double tol_active,
    double sigma_estimate);

// Non-degeneracy metric
//   delta = min( min_{i in N} (c_i + (A^T y*)_i)/||A||, min_{i in B1} x*_i ).
// Empty-set terms are skipped; +inf sentinel when both sets are empty.
double compute_delta(const Iterate& z_star, const PartitionEstimate& p,
                     const StandardFormLP& lp, double sigma_estimate);
double compute_delta(const Iterate& z_star, const PartitionEstimate& p,
                     const StandardFormLP& lp);

// Coordinate partition induced by an infimal-displacement estimate v:
// B = {(v_x)_i > tol}, N2 = {(v_x)_i <= tol, (A^T v_y)_i > tol}, N1 = rest,
// with delta_v = min( min_B (v_x)_i, min_{N2} (A^T v_y)_i/||A|| ).
struct DisplacementPartition {
  std::vector<Index> b_set;
  std::vector<Index> n1_set;
  std::vector<Index> n2_set;
  double delta_v = std::numeric_limits<double>::infinity();
};

DisplacementPartition compute_delta_v(const CertificateCandidate& v,
                                      const StandardFormLP& lp, double tol,
                                      double sigma_estimate);
DisplacementPartition compute_delta_v(const CertificateCandidate& v,
                                      const StandardFormLP& lp, double tol);

// Per-iteration diagnostics captured by the solver's trace sink.
struct TraceRecord {
  long epoch = 0;
  long inner = 0;
  long iteration = 0;
  double fixed_point_residual = 0.0;
  KktError kkt;
  PartitionEstimate partition;
  // Canonical norms of the two certificate candidates; the normalized-iterate
  // norm is NaN at epoch starts (k = 0, estimator undefined).
  double candidate_norm_normalized = std::numeric_limits<double>::quiet_NaN();
  double candidate_norm_difference = std::numeric_limits<double>::quiet_NaN();
  double wall_seconds = 0.0;
};

// Smallest logged iteration after which the running (N, B1) estimate matches
// the oracle on every subsequent record; nullopt when it never stabilizes.
std::optional<long> identification_iteration(
    const std::vector<TraceRecord>& trace, const PartitionEstimate& oracle);

// Empirical sharpness ratio ||z - T(z)|| / dist(z, Z*), both in the canonical
// norm, with Z* given as a finite oracle set. +inf sentinel when z lies in
// the oracle set.
double measure_sharpness(const Iterate& z, const StandardFormLP& lp,
                         const CanonicalNorm& nrm, StepSize step,
                         const std::vector<Iterate>& oracle_optimal_set);

}  // namespace hplp

#endif  // HPLP_DIAGNOSTICS_HPP_
