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

#ifndef HPLP_SOLVER_HPP_
#define HPLP_SOLVER_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hplp/diagnostics.hpp"
#include "hplp/infeasibility.hpp"
#include "hplp/pdhg_core.hpp"

namespace hplp {

// Restart policy for the outer loop. FixedFrequency restarts every k_star
// inner iterations; AdaptiveResidualDecay restarts when the fixed-point
// residual has dropped to beta times its epoch-start value (epoch 0 restarts
// once k exceeds tau0); None never restarts.
struct RestartScheme {
  enum class Kind { kFixedFrequency, kAdaptiveResidualDecay, kNone };

  Kind kind = Kind::kAdaptiveResidualDecay;
  long k_star = 0;
  double beta = 0.36787944117144233;  // 1/e
  long tau0 = 32;

  static RestartScheme fixed(long k_star);
  static RestartScheme adaptive(double beta = 0.36787944117144233,
                                long tau0 = 32);
  static RestartScheme none();
};

// Restart decision at inner iteration k of epoch n. Pure Eq-(5)/(6)
// semantics; the solve loop layers its stall cap on top of this.
bool should_restart(const RestartScheme& scheme, long n, long k,
                    double residual_now, double residual_epoch_start);

enum class SolveStatus {
  kOptimal,
  kPrimalInfeasible,
  kDualInfeasible,
  kPrimalDualInfeasible,
  kIterationLimit,
  kTimeLimit,
};

const char* to_string(SolveStatus status);

struct SolverConfig {
  RestartScheme restart;
  double tolerance = 1e-8;  // relative KKT
  long iteration_limit = 1000000;
  double time_limit_seconds = std::numeric_limits<double>::infinity();
  std::optional<double> eta_override;
  long infeasibility_check_period = 100;  // 0 disables
  long trace_period = 0;                  // 0 disables tracing
  double certificate_tolerance = 1e-6;
  double tol_active = kDefaultActiveTol;  // partition estimates in traces
  // The adaptive trigger provably stalls on infeasible problems (the residual
  // plateaus at ||v||), so epochs are also cut at this many inner iterations.
  // 0 disables. Never binds on feasible instances that restart normally.
  long adaptive_stall_cap = 2000;
  std::uint64_t seed = kDefaultPowerSeed;
  std::optional<Iterate> initial_iterate;
  // Synchronous per-record sink; receives the record and the current iterate.
  std::function<void(const TraceRecord&, const Iterate&)> trace_sink;
};

struct EpochStats {
  long epoch = 0;
  long restart_length = 0;  // tau^n; 0 while the epoch is still running
  double residual_at_start = 0.0;
  KktError kkt_at_start;
};

// A validated Farkas certificate, stored oriented and scaled to unit l2 norm
// so it passes validation as-is.
struct Certificate {
  Vector vector;  // length m for primal infeasibility, n for dual
  CandidateSource source = CandidateSource::kIterateDifference;
  long at_iteration = 0;
  Orientation orientation = Orientation::kAsIs;
  double residual = 0.0;
  double margin = 0.0;
};

struct SolveTotals {
  long iterations = 0;
  long spmv_count = 0;
  double wall_seconds = 0.0;
  double eta = 0.0;
  double sigma_estimate = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kIterationLimit;
  Iterate final_iterate;
  KktError final_kkt;
  std::optional<Certificate> primal_certificate;  // set for *Infeasible
  std::optional<Certificate> dual_certificate;
  std::vector<EpochStats> epochs;
  SolveTotals totals;
};

// One Halpern update from anchor z^{n,0}:
//   ((k+1)/(k+2)) T(z_k) + (1/(k+2)) z_anchor.
Iterate halpern_step(const Iterate& z_k, const Iterate& z_anchor, long k,
                     const StandardFormLP& lp, StepSize step);

// The combination alone, for callers that already computed T(z_k).
Iterate halpern_combine(const Iterate& t_z_k, const Iterate& z_anchor, long k);

// Restarted Halpern PDHG (Algorithm 1 of the scheme): inner Halpern
// iterations from the epoch anchor; on restart the next anchor is one PDHG
// step from the last inner iterate. Terminates on relative KKT error <=
// tolerance, on a validated infeasibility certificate, or on limits.
SolveResult solve(const StandardFormLP& lp, const SolverConfig& config);

enum class BaselineMode { kVanilla, kAveraged, kRestartedAverage };

// Vanilla PDHG fixed-point iteration; averaged additionally reports the
// running average z-bar (termination is checked on the average); restarted
// average restarts vanilla epochs at the running average, triggered on the
// average iterate's fixed-point residual.
SolveResult solve_baseline(const StandardFormLP& lp, const SolverConfig& config,
                           BaselineMode mode);

}  // namespace hplp

#endif  // HPLP_SOLVER_HPP_
