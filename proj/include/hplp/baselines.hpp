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

#ifndef HPLP_BASELINES_HPP_
#define HPLP_BASELINES_HPP_

#include "hplp/pdhg_core.hpp"

namespace hplp {

// Running mean of iterates, z-bar in the average-PDHG scheme.
struct RunningAverage {
  Iterate mean;
  long count = 0;
};

// Incremental mean: z-bar += (z - z-bar)/(count+1).
RunningAverage update_average(RunningAverage avg, const Iterate& z);

// Runs Halpern PDHG and averaged vanilla PDHG side by side from z0 and
// returns the max over k <= k_max of the inf-norm deviation between the
// Halpern iterate z^k and the running average z-bar^k. With unconstrained set
// the operator is affine and the two coincide (up to rounding); the
// projection is what breaks the equivalence.
double trajectory_deviation(const StandardFormLP& lp, const Iterate& z0,
                            long k_max, StepSize step, bool unconstrained);

// Proposition-1 harness: trajectory_deviation in unconstrained mode.
double equivalence_check(const StandardFormLP& lp_unconstrained,
                         const Iterate& z0, long k_max, StepSize step);

}  // namespace hplp

#endif  // HPLP_BASELINES_HPP_
