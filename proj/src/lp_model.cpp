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

#include "hplp/lp_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hplp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Triplet> sorted_entries(const std::vector<Triplet>& in) {
  std::vector<Triplet> out = in;
  std::sort(out.begin(), out.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return out;
}
}  // namespace

StandardFormLP::StandardFormLP(SparseMatrix a_in, Vector b_in, Vector c_in)
    : a(std::move(a_in)), b(std::move(b_in)), c(std::move(c_in)) {
  if (b.size() != a.rows() || c.size() != a.cols()) {
    throw std::invalid_argument("StandardFormLP: inconsistent dimensions");
  }
  if (!b.allFinite() || !c.allFinite()) {
    throw std::invalid_argument("StandardFormLP: non-finite b or c");
  }
}

bool operator==(const GeneralFormLP& a, const GeneralFormLP& b) {
  if (a.name != b.name || a.maximize != b.maximize ||
      a.objective_name != b.objective_name ||
      a.objective_constant != b.objective_constant || a.rows != b.rows ||
      a.columns != b.columns || a.objective != b.objective) {
    return false;
  }
  // Entry order is not semantic; compare as a canonical set.
  std::vector<Triplet> ea = sorted_entries(a.entries);
  std::vector<Triplet> eb = sorted_entries(b.entries);
  if (ea.size() != eb.size()) return false;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].row != eb[i].row || ea[i].col != eb[i].col ||
        ea[i].value != eb[i].value) {
      return false;
    }
  }
  return true;
}

Vector VariableMap::recover_primal(const Vector& x_std) const {
  if (x_std.size() != standard_cols) {
    throw std::invalid_argument("recover_primal: wrong standard-form length");
  }
  Vector x(static_cast<Index>(recoveries.size()));
  for (std::size_t j = 0; j < recoveries.size(); ++j) {
    const VariableRecovery& r = recoveries[j];
    switch (r.kind) {
      case VariableRecovery::Kind::kShifted:
        x[static_cast<Index>(j)] = r.offset + x_std[r.col];
        break;
      case VariableRecovery::Kind::kMirrored:
        x[static_cast<Index>(j)] = r.offset - x_std[r.col];
        break;
      case VariableRecovery::Kind::kSplit:
        x[static_cast<Index>(j)] = x_std[r.col] - x_std[r.neg_col];
        break;
    }
  }
  return x;
}

namespace {

struct WorkColumn {
  double lower = 0.0;
  double upper = kInf;
  double obj = 0.0;  // sense-applied objective coefficient
  bool is_original = false;
};

void validate_general_form(const GeneralFormLP& g) {
  const Index m = g.num_rows();
  const Index n = g.num_cols();
  if (static_cast<Index>(g.objective.size()) != n) {
    throw std::invalid_argument("GeneralFormLP: objective length mismatch");
  }
  for (Index j = 0; j < n; ++j) {
    const GeneralFormColumn& col = g.columns[static_cast<std::size_t>(j)];
    if (std::isnan(col.lower) || std::isnan(col.upper) ||
        !std::isfinite(g.objective[static_cast<std::size_t>(j)])) {
      throw std::invalid_argument("GeneralFormLP: non-finite data for column '" +
                                  col.name + "'");
    }
    if (col.lower > col.upper) {
      throw std::invalid_argument("GeneralFormLP: inconsistent bounds for '" +
                                  col.name + "' (lower > upper)");
    }
  }
  for (const GeneralFormRow& row : g.rows) {
    if (!std::isfinite(row.rhs) || (row.range && !std::isfinite(*row.range))) {
      throw std::invalid_argument("GeneralFormLP: non-finite rhs/range for row '" +
                                  row.name + "'");
    }
  }
  for (const Triplet& t : g.entries) {
    if (t.row < 0 || t.row >= m || t.col < 0 || t.col >= n) {
      throw std::invalid_argument("GeneralFormLP: entry index out of range");
    }
    if (!std::isfinite(t.value)) {
      throw std::invalid_argument("GeneralFormLP: non-finite matrix entry");
    }
  }
  std::vector<Triplet> s = sorted_entries(g.entries);
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i].row == s[i - 1].row && s[i].col == s[i - 1].col) {
      throw std::invalid_argument("GeneralFormLP: duplicate matrix entry");
    }
  }
}

// Resolved [lower, upper] interval of a row, following the de-facto RANGES
// convention: L rows get [rhs - |r|, rhs], G rows [rhs, rhs + |r|], E rows
// pick the side by the sign of r.
std::pair<double, double> row_interval(const GeneralFormRow& row) {
  switch (row.relation) {
    case RowRelation::kLessEqual:
      return {row.range ? row.rhs - std::abs(*row.range) : -kInf, row.rhs};
    case RowRelation::kGreaterEqual:
      return {row.rhs, row.range ? row.rhs + std::abs(*row.range) : kInf};
    case RowRelation::kEqual:
      if (!row.range) return {row.rhs, row.rhs};
      return *row.range >= 0 ? std::make_pair(row.rhs, row.rhs + *row.range)
                             : std::make_pair(row.rhs + *row.range, row.rhs);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::pair<StandardFormLP, VariableMap> to_standard_form(const GeneralFormLP& g) {
  validate_general_form(g);
  const Index m_orig = g.num_rows();
  const Index n_orig = g.num_cols();
  const double sense = g.maximize ? -1.0 : 1.0;

  VariableMap map;
  map.objective_sign = sense;
  map.recoveries.resize(static_cast<std::size_t>(n_orig));
  map.row_conversions.resize(static_cast<std::size_t>(m_orig));

  // Stage 1: rows become equalities; inequality and ranged rows gain slacks.
  std::vector<WorkColumn> work(static_cast<std::size_t>(n_orig));
  for (Index j = 0; j < n_orig; ++j) {
    const GeneralFormColumn& col = g.columns[static_cast<std::size_t>(j)];
    work[static_cast<std::size_t>(j)] = {col.lower, col.upper,
                                         sense * g.objective[static_cast<std::size_t>(j)],
                                         true};
  }
  std::vector<double> row_b(static_cast<std::size_t>(m_orig), 0.0);
  std::vector<Index> slack_item_of_row(static_cast<std::size_t>(m_orig), -1);
  for (Index i = 0; i < m_orig; ++i) {
    const GeneralFormRow& row = g.rows[static_cast<std::size_t>(i)];
    auto [lo, hi] = row_interval(row);
    RowConversion& conv = map.row_conversions[static_cast<std::size_t>(i)];
    conv.lower = lo;
    conv.upper = hi;
    if (lo == hi) {
      row_b[static_cast<std::size_t>(i)] = lo;
    } else if (hi < kInf) {
      // ax + s = hi with s in [0, hi - lo]; a ranged row bounds the slack.
      row_b[static_cast<std::size_t>(i)] = hi;
      conv.slack_sign = 1.0;
      slack_item_of_row[static_cast<std::size_t>(i)] =
          static_cast<Index>(work.size());
      work.push_back({0.0, lo > -kInf ? hi - lo : kInf, 0.0, false});
    } else {
      // ax - s = lo with s >= 0.
      row_b[static_cast<std::size_t>(i)] = lo;
      conv.slack_sign = -1.0;
      slack_item_of_row[static_cast<std::size_t>(i)] =
          static_cast<Index>(work.size());
      work.push_back({0.0, kInf, 0.0, false});
    }
  }

  // Stage 2: variable transforms. Assign standard-form column indices.
  struct Transform {
    enum class Kind { kShift, kMirror, kSplit } kind;
    Index col = 0;
    Index neg_col = 0;
    double offset = 0.0;
  };
  std::vector<Transform> transforms(work.size());
  std::vector<double> c_std;
  double shift_const = 0.0;
  struct PendingBound {
    Index col;
    double rhs;
  };
  std::vector<PendingBound> pending_bounds;
  Index next_col = 0;
  for (std::size_t w = 0; w < work.size(); ++w) {
    const WorkColumn& wc = work[w];
    Transform& tr = transforms[w];
    if (wc.lower == -kInf && wc.upper == kInf) {
      tr.kind = Transform::Kind::kSplit;
      tr.col = next_col++;
      tr.neg_col = next_col++;
      c_std.push_back(wc.obj);
      c_std.push_back(-wc.obj);
    } else if (wc.lower > -kInf) {
      tr.kind = Transform::Kind::kShift;
      tr.col = next_col++;
      tr.offset = wc.lower;
      c_std.push_back(wc.obj);
      shift_const += wc.obj * wc.lower;
      if (wc.upper < kInf) {
        pending_bounds.push_back({tr.col, wc.upper - wc.lower});
      }
    } else {
      tr.kind = Transform::Kind::kMirror;
      tr.col = next_col++;
      tr.offset = wc.upper;
      c_std.push_back(-wc.obj);
      shift_const += wc.obj * wc.upper;
    }
  }
  // Slack of each explicit upper-bound row.
  const Index m_std = m_orig + static_cast<Index>(pending_bounds.size());
  map.bound_rows.reserve(pending_bounds.size());
  for (std::size_t t = 0; t < pending_bounds.size(); ++t) {
    Index slack = next_col++;
    c_std.push_back(0.0);
    map.bound_rows.push_back({m_orig + static_cast<Index>(t),
                              pending_bounds[t].col, slack,
                              pending_bounds[t].rhs});
  }
  const Index n_std = next_col;

  // Recoveries for original variables and slack indices for rows.
  for (Index j = 0; j < n_orig; ++j) {
    const Transform& tr = transforms[static_cast<std::size_t>(j)];
    VariableRecovery& rec = map.recoveries[static_cast<std::size_t>(j)];
    switch (tr.kind) {
      case Transform::Kind::kShift:
        rec = {VariableRecovery::Kind::kShifted, tr.col, 0, tr.offset};
        break;
      case Transform::Kind::kMirror:
        rec = {VariableRecovery::Kind::kMirrored, tr.col, 0, tr.offset};
        break;
      case Transform::Kind::kSplit:
        rec = {VariableRecovery::Kind::kSplit, tr.col, tr.neg_col, 0.0};
        break;
    }
  }
  for (Index i = 0; i < m_orig; ++i) {
    Index item = slack_item_of_row[static_cast<std::size_t>(i)];
    if (item >= 0) {
      map.row_conversions[static_cast<std::size_t>(i)].slack_col =
          transforms[static_cast<std::size_t>(item)].col;
    }
  }

  // Emit the standard-form matrix and right-hand side.
  std::vector<Triplet> triplets;
  triplets.reserve(g.entries.size() * 2 + work.size() + pending_bounds.size() * 2);
  Vector b_std(m_std);
  for (Index i = 0; i < m_orig; ++i) {
    b_std[i] = row_b[static_cast<std::size_t>(i)];
  }
  for (const Triplet& t : g.entries) {
    const Transform& tr = transforms[static_cast<std::size_t>(t.col)];
    switch (tr.kind) {
      case Transform::Kind::kShift:
        triplets.push_back({t.row, tr.col, t.value});
        b_std[t.row] -= t.value * tr.offset;
        break;
      case Transform::Kind::kMirror:
        triplets.push_back({t.row, tr.col, -t.value});
        b_std[t.row] -= t.value * tr.offset;
        break;
      case Transform::Kind::kSplit:
        triplets.push_back({t.row, tr.col, t.value});
        triplets.push_back({t.row, tr.neg_col, -t.value});
        break;
    }
  }
  for (Index i = 0; i < m_orig; ++i) {
    const RowConversion& conv = map.row_conversions[static_cast<std::size_t>(i)];
    if (conv.slack_col) {
      triplets.push_back({i, *conv.slack_col, conv.slack_sign});
    }
  }
  for (const BoundRow& br : map.bound_rows) {
    triplets.push_back({br.row, br.col, 1.0});
    triplets.push_back({br.row, br.slack_col, 1.0});
    b_std[br.row] = br.rhs;
  }

  map.objective_constant = sense * shift_const + g.objective_constant;
  map.standard_rows = m_std;
  map.standard_cols = n_std;

  Vector c_vec(n_std);
  for (Index j = 0; j < n_std; ++j) c_vec[j] = c_std[static_cast<std::size_t>(j)];

  StandardFormLP lp(SparseMatrix(m_std, n_std, triplets), std::move(b_std),
                    std::move(c_vec));
  return {std::move(lp), std::move(map)};
}

}  // namespace hplp
