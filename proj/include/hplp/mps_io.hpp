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

#ifndef HPLP_MPS_IO_HPP_
#define HPLP_MPS_IO_HPP_

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hplp/lp_model.hpp"
#include "hplp/solver.hpp"

namespace hplp {

class MpsParseError : public std::runtime_error {
 public:
  MpsParseError(long line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  long line() const { return line_; }

 private:
  long line_;
};

// Parse-level metadata: problem and objective names plus non-fatal warnings
// (dropped extra N rows, relaxed integrality, bound conventions).
struct MpsDocument {
  std::string problem_name;
  std::string objective_row_name;
  std::vector<std::string> warnings;
};

// Accepts fixed- and free-format MPS with sections NAME / OBJSENSE / ROWS /
// COLUMNS / RHS / RANGES / BOUNDS / ENDATA, row types N/L/G/E, and bound
// types UP/LO/FX/FR/MI/PL/BV (BV and MARKER integrality relax to continuous
// bounds). The first N row is the objective; later N rows are dropped with a
// warning. Throws MpsParseError with a line number.
GeneralFormLP parse_mps(std::istream& in, MpsDocument* doc = nullptr);
GeneralFormLP parse_mps(const std::string& text, MpsDocument* doc = nullptr);
GeneralFormLP parse_mps_file(const std::string& path, MpsDocument* doc = nullptr);

// Normalized free-format MPS. Parsing the output reproduces the input
// GeneralFormLP exactly (17-significant-digit numbers round-trip doubles).
std::string write_mps(const GeneralFormLP& g);

struct SolutionReport {
  std::string instance;
  SolveStatus status = SolveStatus::kIterationLimit;
  double primal_objective = std::numeric_limits<double>::quiet_NaN();
  double dual_objective = std::numeric_limits<double>::quiet_NaN();
  KktError kkt;
  long iterations = 0;
  long epochs = 0;
  long spmv_count = 0;
  double eta = 0.0;
  double sigma_estimate = 0.0;
  double solve_seconds = 0.0;  // segregated under "timing" when serialized
  std::optional<Vector> primal_solution;  // original variable space
  std::optional<Vector> dual_solution;    // standard-form dual
  std::optional<Certificate> primal_certificate;
  std::optional<Certificate> dual_certificate;
  std::vector<std::pair<std::string, std::string>> config_echo;
};

struct JsonWriteOptions {
  bool include_timing = true;
  // Vectors longer than this are elided with an explicit flag.
  Index vector_elision_threshold = 100000;
};

// Deterministic key order; numbers carry 17 significant digits so floats
// round-trip bit-identically through parse_solution_json.
std::string write_solution_json(const SolutionReport& report,
                                const JsonWriteOptions& options = {});
SolutionReport parse_solution_json(const std::string& text);

// Fixed header, one row per logged iteration.
std::string write_trace_csv(const std::vector<TraceRecord>& trace);

}  // namespace hplp

#endif  // HPLP_MPS_IO_HPP_
