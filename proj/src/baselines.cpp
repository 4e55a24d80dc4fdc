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

#include "hplp/baselines.hpp"

#include <algorithm>

namespace hplp {

RunningAverage update_average(RunningAverage avg, const Iterate& z) {
  if (avg.count == 0) {
    avg.mean = z;
    avg.count = 1;
    return avg;
  }
  const double w = 1.0 / static_cast<double>(avg.count + 1);
  avg.mean.x += w * (z.x - avg.mean.x);
  avg.mean.y += w * (z.y - avg.mean.y);
  avg.count += 1;
  return avg;
}

double trajectory_deviation(const StandardFormLP& lp, const Iterate& z0,
                            long k_max, StepSize step, bool unconstrained) {
  Iterate halpern = z0;
  Iterate vanilla = z0;
  RunningAverage avg = update_average({}, z0);  // z-bar^0 = z^0
  double max_dev = 0.0;
  for (long k = 0; k < k_max; ++k) {
    Iterate t_halpern = pdhg_step(halpern, lp, step, unconstrained);
    const double w = 1.0 / static_cast<double>(k + 2);
    halpern = {(1.0 - w) * t_halpern.x + w * z0.x,
               (1.0 - w) * t_halpern.y + w * z0.y};
    vanilla = pdhg_step(vanilla, lp, step, unconstrained);
    avg = update_average(std::move(avg), vanilla);
    max_dev = std::max(max_dev, linf_norm(halpern - avg.mean));
  }
  return max_dev;
}

double equivalence_check(const StandardFormLP& lp_unconstrained,
                         const Iterate& z0, long k_max, StepSize step) {
  return trajectory_deviation(lp_unconstrained, z0, k_max, step,
                              /*unconstrained=*/true);
}

}  // namespace hplp
