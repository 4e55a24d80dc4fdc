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

#ifndef HPLP_LP_MODEL_HPP_
#define HPLP_LP_MODEL_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hplp/sparse_matrix.hpp"

namespace hplp {

// min c^T x  s.t.  A x = b,  x >= 0.
struct StandardFormLP {
  SparseMatrix a;
  Vector b;
  Vector c;

  // Validates mutually consistent dimensions and finite b, c.
  StandardFormLP(SparseMatrix a_in, Vector b_in, Vector c_in);

  Index num_rows() const { return a.rows(); }
  Index num_cols() const { return a.cols(); }
};

enum class RowRelation { kLessEqual, kEqual, kGreaterEqual };

struct GeneralFormRow {
  std::string name;
  RowRelation relation = RowRelation::kEqual;
  double rhs = 0.0;
  std::optional<double> range;  // widens the row to an interval; see RANGES

  friend bool operator==(const GeneralFormRow&, const GeneralFormRow&) = default;
};

struct GeneralFormColumn {
  std::string name;
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();

  friend bool operator==(const GeneralFormColumn&, const GeneralFormColumn&) = default;
};

// Ingestion superset of the standard form: relational rows, ranges, and
// general variable bounds. Produced by the MPS parser.
struct GeneralFormLP {
  std::string name;
  bool maximize = false;
  std::string objective_name;
  double objective_constant = 0.0;
  std::vector<GeneralFormRow> rows;
  std::vector<GeneralFormColumn> columns;
  std::vector<double> objective;  // one coefficient per column
  std::vector<Triplet> entries;   // constraint matrix, row/col indices

  Index num_rows() const { return static_cast<Index>(rows.size()); }
  Index num_cols() const { return static_cast<Index>(columns.size()); }

  friend bool operator==(const GeneralFormLP&, const GeneralFormLP&);
};

bool operator==(const GeneralFormLP& a, const GeneralFormLP& b);

// How one original variable is reconstructed from standard-form variables.
struct VariableRecovery {
  enum class Kind { kShifted, kMirrored, kSplit };
  Kind kind = Kind::kShifted;
  Index col = 0;      // standard-form column (positive part for kSplit)
  Index neg_col = 0;  // kSplit only
  double offset = 0;  // lower bound (kShifted) or upper bound (kMirrored)
};

// Conversion metadata for one row of the general form.
struct RowConversion {
  double lower = 0.0;  // resolved row interval [lower, upper]
  double upper = 0.0;
  std::optional<Index> slack_col;
  double slack_sign = 0.0;  // +1 for <=-style slack, -1 for >=-style
};

// Explicit upper-bound row appended to the standard form: x_col + s = rhs.
struct BoundRow {
  Index row = 0;  // standard-form row index
  Index col = 0;
  Index slack_col = 0;
  double rhs = 0.0;
};

struct VariableMap {
  std::vector<VariableRecovery> recoveries;  // one per original column
  std::vector<RowConversion> row_conversions;
  std::vector<BoundRow> bound_rows;
  double objective_sign = 1.0;      // -1 when the original maximizes
  double objective_constant = 0.0;  // recover = sign * std_obj + constant
  Index standard_rows = 0;
  Index standard_cols = 0;

  // Original-variable values from a standard-form point.
  Vector recover_primal(const Vector& x_std) const;

  // Original objective value from the standard-form objective c^T x.
  double recover_objective(double standard_objective) const {
    return objective_sign * standard_objective + objective_constant;
  }
};

// Reduces a general-form LP to Eq-(1) standard form: inequality rows gain
// slack columns, free variables split into positive/negative parts, finite
// lower bounds shift into b, finite upper bounds become explicit rows with
// slacks. Throws std::invalid_argument on inconsistent bounds (lower > upper)
// or malformed input.
std::pair<StandardFormLP, VariableMap> to_standard_form(const GeneralFormLP& g);

}  // namespace hplp

#endif  // HPLP_LP_MODEL_HPP_
