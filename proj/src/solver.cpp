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

#include "hplp/solver.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace hplp {

namespace {

constexpr double kPowerTol = 1e-4;
constexpr Index kPowerMaxIters = 5000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Setup {
  double sigma_raw = 0.0;
  double sigma_used = 0.0;  // raw estimate * (1 + tol), the step-size bound
  StepSize step{1.0, 0.0};
  long n_spmv = 0;
};

void validate_config(const SolverConfig& config) {
  if (!(config.tolerance > 0.0)) {
    throw std::invalid_argument("SolverConfig: tolerance must be > 0");
  }
  if (config.iteration_limit < 0) {
    throw std::invalid_argument("SolverConfig: iteration_limit must be >= 0");
  }
  if (!(config.certificate_tolerance > 0.0)) {
    throw std::invalid_argument(
        "SolverConfig: certificate_tolerance must be > 0");
  }
  if (config.infeasibility_check_period < 0 || config.trace_period < 0 ||
      config.adaptive_stall_cap < 0) {
    throw std::invalid_argument("SolverConfig: periods must be >= 0");
  }
  if (config.restart.kind == RestartScheme::Kind::kFixedFrequency &&
      config.restart.k_star < 1) {
    throw std::invalid_argument("RestartScheme: k_star must be >= 1");
  }
  if (config.restart.kind == RestartScheme::Kind::kAdaptiveResidualDecay &&
      (!(config.restart.beta > 0.0) || !(config.restart.beta < 1.0) ||
       config.restart.tau0 < 1)) {
    throw std::invalid_argument(
        "RestartScheme: adaptive needs beta in (0,1) and tau0 >= 1");
  }
}

Setup make_setup(const StandardFormLP& lp, const SolverConfig& config) {
  validate_config(config);
  Setup s;
  PowerIterationResult pi =
      power_iteration(lp.a, kPowerTol, kPowerMaxIters, config.seed);
  s.sigma_raw = pi.sigma;
  s.sigma_used = pi.sigma * (1.0 + kPowerTol);
  s.n_spmv = 2 * pi.iterations;
  s.step = config.eta_override ? StepSize(*config.eta_override, s.sigma_used)
                               : StepSize::largest_stable(s.sigma_used);
  return s;
}

Iterate initial_point(const StandardFormLP& lp, const SolverConfig& config) {
  if (!config.initial_iterate) return Iterate::zero(lp);
  const Iterate& z = *config.initial_iterate;
  if (z.x.size() != lp.num_cols() || z.y.size() != lp.num_rows()) {
    throw std::invalid_argument("SolverConfig: initial iterate has wrong size");
  }
  return z;
}

Certificate make_certificate(const Vector& raw, CandidateSource source,
                             long at_iteration, Orientation orientation,
                             double residual, double margin) {
  const double s = orientation == Orientation::kNegated ? -1.0 : 1.0;
  Certificate cert;
  cert.vector = (s / raw.norm()) * raw;
  cert.source = source;
  cert.at_iteration = at_iteration;
  cert.orientation = orientation;
  cert.residual = residual;
  cert.margin = margin;
  return cert;
}

struct CertificateScan {
  std::optional<Certificate> primal;
  std::optional<Certificate> dual;
  long n_spmv = 0;

  void check(const CertificateCandidate& cand, const StandardFormLP& lp,
             double tol, double sigma) {
    if (!primal && cand.v_y.norm() > 0.0) {
      FarkasReport rep =
          validate_primal_infeasibility(cand.v_y, lp, tol, sigma);
      n_spmv += 1;
      if (rep.primal_valid) {
        primal = make_certificate(cand.v_y, cand.source, cand.at_iteration,
                                  rep.primal_orientation,
                                  rep.primal_cert_residual, rep.primal_margin);
      }
    }
    if (!dual && cand.v_x.norm() > 0.0) {
      FarkasReport rep = validate_dual_infeasibility(cand.v_x, lp, tol, sigma);
      n_spmv += 1;
      if (rep.dual_valid) {
        dual = make_certificate(cand.v_x, cand.source, cand.at_iteration,
                                rep.dual_orientation, rep.dual_cert_residual,
                                rep.dual_margin);
      }
    }
  }

  SolveStatus status() const {
    if (primal && dual) return SolveStatus::kPrimalDualInfeasible;
    if (primal) return SolveStatus::kPrimalInfeasible;
    return SolveStatus::kDualInfeasible;
  }
  bool any() const { return primal.has_value() || dual.has_value(); }
};

}  // namespace

RestartScheme RestartScheme::fixed(long k_star) {
  RestartScheme s;
  s.kind = Kind::kFixedFrequency;
  s.k_star = k_star;
  return s;
}

RestartScheme RestartScheme::adaptive(double beta, long tau0) {
  RestartScheme s;
  s.kind = Kind::kAdaptiveResidualDecay;
  s.beta = beta;
  s.tau0 = tau0;
  return s;
}

RestartScheme RestartScheme::none() {
  RestartScheme s;
  s.kind = Kind::kNone;
  return s;
}

bool should_restart(const RestartScheme& scheme, long n, long k,
                    double residual_now, double residual_epoch_start) {
  switch (scheme.kind) {
    case RestartScheme::Kind::kFixedFrequency:
      return k >= scheme.k_star;
    case RestartScheme::Kind::kAdaptiveResidualDecay:
      if (n == 0) return k > scheme.tau0;
      return residual_now <= scheme.beta * residual_epoch_start;
    case RestartScheme::Kind::kNone:
      return false;
  }
  return false;
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kPrimalInfeasible:
      return "primal_infeasible";
    case SolveStatus::kDualInfeasible:
      return "dual_infeasible";
    case SolveStatus::kPrimalDualInfeasible:
      return "primal_dual_infeasible";
    case SolveStatus::kIterationLimit:
      return "iteration_limit";
    case SolveStatus::kTimeLimit:
      return "time_limit";
  }
  return "unknown";
}

Iterate halpern_combine(const Iterate& t_z_k, const Iterate& z_anchor, long k) {
  const double w = 1.0 / static_cast<double>(k + 2);
  return {(1.0 - w) * t_z_k.x + w * z_anchor.x,
          (1.0 - w) * t_z_k.y + w * z_anchor.y};
}

Iterate halpern_step(const Iterate& z_k, const Iterate& z_anchor, long k,
                     const StandardFormLP& lp, StepSize step) {
  if (k < 0) throw std::invalid_argument("halpern_step: k must be >= 0");
  return halpern_combine(pdhg_step(z_k, lp, step), z_anchor, k);
}

SolveResult solve(const StandardFormLP& lp, const SolverConfig& config) {
  const auto t0 = Clock::now();
  Setup su = make_setup(lp, config);
  long n_spmv = su.n_spmv;
  const double eta = su.step.eta;

  Iterate z = initial_point(lp, config);
  Vector a_x = spmv(lp.a, z.x);
  ++n_spmv;
  Iterate anchor = z;
  Vector a_x_anchor = a_x;

  long n = 0;
  long k = 0;
  long it = 0;
  double res_epoch_start = 0.0;
  std::vector<EpochStats> epochs;

  double best_kkt = std::numeric_limits<double>::infinity();
  Iterate best = z;
  KktError best_err;

  SolveResult out;
  auto finish = [&](SolveStatus status, const Iterate& final_iterate,
                    const KktError& err) {
    out.status = status;
    out.final_iterate = final_iterate;
    out.final_kkt = err;
    if (!epochs.empty() && epochs.back().restart_length == 0) {
      epochs.back().restart_length = k;
    }
    out.epochs = std::move(epochs);
    out.totals = {it, n_spmv, seconds_since(t0), eta, su.sigma_used};
  };

  while (true) {
    if (it >= config.iteration_limit) {
      finish(SolveStatus::kIterationLimit,
             std::isfinite(best_kkt) ? best : z,
             std::isfinite(best_kkt) ? best_err : kkt_error(z, lp));
      if (!std::isfinite(best_kkt)) out.totals.spmv_count += 2;
      return out;
    }
    if (seconds_since(t0) > config.time_limit_seconds) {
      finish(SolveStatus::kTimeLimit, std::isfinite(best_kkt) ? best : z,
             std::isfinite(best_kkt) ? best_err : kkt_error(z, lp));
      if (!std::isfinite(best_kkt)) out.totals.spmv_count += 2;
      return out;
    }

    PdhgStepResult sr = pdhg_step_with_products(z, lp, su.step, a_x);
    n_spmv += 2;
    const KktError kkt = kkt_error_with_products(z, lp, a_x, sr.at_y);
    const double res =
        canonical_norm_with_product(z - sr.next, a_x - sr.a_x_next, eta);
    if (k == 0) {
      res_epoch_start = res;
      epochs.push_back({n, 0, res, kkt});
    }
    if (kkt.max_relative < best_kkt) {
      best_kkt = kkt.max_relative;
      best = z;
      best_err = kkt;
    }

    if (config.trace_period > 0 && it % config.trace_period == 0 &&
        config.trace_sink) {
      TraceRecord rec;
      rec.epoch = n;
      rec.inner = k;
      rec.iteration = it;
      rec.fixed_point_residual = res;
      rec.kkt = kkt;
      rec.partition = partition_estimate_from_reduced_costs(
          z, lp.c + sr.at_y, config.tol_active, su.sigma_used);
      rec.candidate_norm_difference =
          canonical_norm_with_product(sr.next - z, sr.a_x_next - a_x, eta);
      if (k >= 1) {
        const double scale = 2.0 / static_cast<double>(k);
        rec.candidate_norm_normalized = canonical_norm_with_product(
            scale * (z - anchor), scale * (a_x - a_x_anchor), eta);
      }
      rec.wall_seconds = seconds_since(t0);
      config.trace_sink(rec, z);
    }

    if (kkt.max_relative <= config.tolerance) {
      finish(SolveStatus::kOptimal, z, kkt);
      return out;
    }

    if (config.infeasibility_check_period > 0 && it > 0 &&
        (it % config.infeasibility_check_period == 0 || k == 0)) {
      CertificateScan scan;
      CertificateCandidate difference{sr.next.x - z.x, sr.next.y - z.y,
                                      CandidateSource::kIterateDifference, it};
      scan.check(difference, lp, config.certificate_tolerance, su.sigma_used);
      if (k >= 1) {
        const double scale = 2.0 / static_cast<double>(k);
        CertificateCandidate normalized{scale * (z.x - anchor.x),
                                        scale * (z.y - anchor.y),
                                        CandidateSource::kNormalizedIterate, it};
        scan.check(normalized, lp, config.certificate_tolerance, su.sigma_used);
      }
      n_spmv += scan.n_spmv;
      if (scan.any()) {
        out.primal_certificate = std::move(scan.primal);
        out.dual_certificate = std::move(scan.dual);
        finish(scan.status(), z, kkt);
        return out;
      }
    }

    bool restart = should_restart(config.restart, n, k, res, res_epoch_start);
    if (!restart &&
        config.restart.kind == RestartScheme::Kind::kAdaptiveResidualDecay &&
        config.adaptive_stall_cap > 0 && k >= config.adaptive_stall_cap) {
      restart = true;  // stalled epoch; see SolverConfig::adaptive_stall_cap
    }
    if (restart) {
      epochs.back().restart_length = k;
      z = std::move(sr.next);
      a_x = std::move(sr.a_x_next);
      anchor = z;
      a_x_anchor = a_x;
      ++n;
      k = 0;
    } else {
      const double w = 1.0 / static_cast<double>(k + 2);
      z = {(1.0 - w) * sr.next.x + w * anchor.x,
           (1.0 - w) * sr.next.y + w * anchor.y};
      a_x = (1.0 - w) * sr.a_x_next + w * a_x_anchor;
      ++k;
    }
    ++it;
  }
}

SolveResult solve_baseline(const StandardFormLP& lp, const SolverConfig& config,
                           BaselineMode mode) {
  const auto t0 = Clock::now();
  Setup su = make_setup(lp, config);
  long n_spmv = su.n_spmv;
  const double eta = su.step.eta;
  const bool averaged = mode != BaselineMode::kVanilla;
  const bool restarted = mode == BaselineMode::kRestartedAverage;

  Iterate z = initial_point(lp, config);
  Vector a_x = spmv(lp.a, z.x);
  ++n_spmv;

  // Averaged modes track the running mean and its matrix products; the
  // products of a mean are the means of the products.
  RunningAverage avg;
  Vector a_x_avg;
  Vector at_y_avg;
  bool avg_products_ready = false;

  long n = 0;
  long k = 0;
  long it = 0;
  double res_epoch_start = 0.0;
  std::vector<EpochStats> epochs;

  double best_kkt = std::numeric_limits<double>::infinity();
  Iterate best = z;
  KktError best_err;

  SolveResult out;
  auto finish = [&](SolveStatus status, const Iterate& final_iterate,
                    const KktError& err) {
    out.status = status;
    out.final_iterate = final_iterate;
    out.final_kkt = err;
    if (!epochs.empty() && epochs.back().restart_length == 0) {
      epochs.back().restart_length = k;
    }
    out.epochs = std::move(epochs);
    out.totals = {it, n_spmv, seconds_since(t0), eta, su.sigma_used};
  };

  while (true) {
    if (it >= config.iteration_limit || seconds_since(t0) > config.time_limit_seconds) {
      const SolveStatus status = it >= config.iteration_limit
                                     ? SolveStatus::kIterationLimit
                                     : SolveStatus::kTimeLimit;
      if (std::isfinite(best_kkt)) {
        finish(status, best, best_err);
      } else {
        finish(status, z, kkt_error(z, lp));
        out.totals.spmv_count += 2;
      }
      return out;
    }

    PdhgStepResult sr = pdhg_step_with_products(z, lp, su.step, a_x);
    n_spmv += 2;

    if (averaged) {
      // Fold the current vanilla iterate (products now known) into the mean.
      if (!avg_products_ready) {
        avg = update_average({}, z);
        a_x_avg = a_x;
        at_y_avg = sr.at_y;
        avg_products_ready = true;
      } else {
        avg = update_average(std::move(avg), z);
        const double w = 1.0 / static_cast<double>(avg.count);
        a_x_avg += w * (a_x - a_x_avg);
        at_y_avg += w * (sr.at_y - at_y_avg);
      }
    }

    const Iterate& candidate = averaged ? avg.mean : z;
    const KktError kkt =
        averaged ? kkt_error_with_products(avg.mean, lp, a_x_avg, at_y_avg)
                 : kkt_error_with_products(z, lp, a_x, sr.at_y);

    const bool tracing = config.trace_period > 0 &&
                         it % config.trace_period == 0 && config.trace_sink;
    double res;
    if (averaged && (restarted || tracing || k == 0)) {
      PdhgStepResult avg_step =
          pdhg_step_with_products(avg.mean, lp, su.step, a_x_avg);
      n_spmv += 2;
      res = canonical_norm_with_product(avg.mean - avg_step.next,
                                        a_x_avg - avg_step.a_x_next, eta);
    } else if (!averaged) {
      res = canonical_norm_with_product(z - sr.next, a_x - sr.a_x_next, eta);
    } else {
      res = std::numeric_limits<double>::quiet_NaN();
    }
    if (k == 0) {
      res_epoch_start = res;
      epochs.push_back({n, 0, res, kkt});
    }
    if (kkt.max_relative < best_kkt) {
      best_kkt = kkt.max_relative;
      best = candidate;
      best_err = kkt;
    }

    if (tracing) {
      TraceRecord rec;
      rec.epoch = n;
      rec.inner = k;
      rec.iteration = it;
      rec.fixed_point_residual = res;
      rec.kkt = kkt;
      rec.partition = partition_estimate_from_reduced_costs(
          candidate, lp.c + (averaged ? at_y_avg : sr.at_y), config.tol_active,
          su.sigma_used);
      rec.candidate_norm_difference =
          canonical_norm_with_product(sr.next - z, sr.a_x_next - a_x, eta);
      rec.wall_seconds = seconds_since(t0);
      config.trace_sink(rec, candidate);
    }

    if (kkt.max_relative <= config.tolerance) {
      finish(SolveStatus::kOptimal, candidate, kkt);
      return out;
    }

    if (config.infeasibility_check_period > 0 && it > 0 &&
        it % config.infeasibility_check_period == 0) {
      // Only the iterate-difference estimator applies to vanilla sequences.
      CertificateScan scan;
      CertificateCandidate difference{sr.next.x - z.x, sr.next.y - z.y,
                                      CandidateSource::kIterateDifference, it};
      scan.check(difference, lp, config.certificate_tolerance, su.sigma_used);
      n_spmv += scan.n_spmv;
      if (scan.any()) {
        out.primal_certificate = std::move(scan.primal);
        out.dual_certificate = std::move(scan.dual);
        finish(scan.status(), candidate, kkt);
        return out;
      }
    }

    bool restart = restarted &&
                   should_restart(config.restart, n, k, res, res_epoch_start);
    if (restarted && !restart &&
        config.restart.kind == RestartScheme::Kind::kAdaptiveResidualDecay &&
        config.adaptive_stall_cap > 0 && k >= config.adaptive_stall_cap) {
      restart = true;
    }
    if (restart) {
      epochs.back().restart_length = k;
      z = avg.mean;
      a_x = a_x_avg;
      // The new epoch's average starts empty; the next iteration folds the
      // restart point in once, with a_x carried over and A^T y recomputed.
      avg = RunningAverage{};
      avg_products_ready = false;
      ++n;
      k = 0;
    } else {
      z = std::move(sr.next);
      a_x = std::move(sr.a_x_next);
      ++k;
    }
    ++it;
  }
}

}  // namespace hplp
