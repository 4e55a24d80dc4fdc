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

#include "hplp/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace hplp {

SparseMatrix::SparseMatrix(Index n_rows, Index n_cols,
                           const std::vector<Triplet>& entries)
    : rows_(n_rows), cols_(n_cols) {
  if (n_rows < 0 || n_cols < 0) {
    throw std::invalid_argument("SparseMatrix: negative dimension");
  }
  for (const Triplet& t : entries) {
    if (t.row < 0 || t.row >= n_rows || t.col < 0 || t.col >= n_cols) {
      throw std::invalid_argument(
          "SparseMatrix: entry (" + std::to_string(t.row) + ", " +
          std::to_string(t.col) + ") out of range for " +
          std::to_string(n_rows) + "x" + std::to_string(n_cols));
    }
    if (!std::isfinite(t.value)) {
      throw std::invalid_argument("SparseMatrix: non-finite value at (" +
                                  std::to_string(t.row) + ", " +
                                  std::to_string(t.col) + ")");
    }
  }
  std::vector<Triplet> sorted = entries;
  std::sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].row == sorted[i - 1].row && sorted[i].col == sorted[i - 1].col) {
      throw std::invalid_argument("SparseMatrix: duplicate entry at (" +
                                  std::to_string(sorted[i].row) + ", " +
                                  std::to_string(sorted[i].col) + ")");
    }
  }

  std::vector<Eigen::Triplet<double>> et;
  et.reserve(entries.size());
  for (const Triplet& t : entries) {
    et.emplace_back(static_cast<int>(t.row), static_cast<int>(t.col), t.value);
  }
  by_row_.resize(n_rows, n_cols);
  by_row_.setFromTriplets(et.begin(), et.end());
  by_col_.resize(n_rows, n_cols);
  by_col_.setFromTriplets(et.begin(), et.end());
  by_row_.makeCompressed();
  by_col_.makeCompressed();
}

std::vector<Triplet> SparseMatrix::triplets_row_order() const {
  std::vector<Triplet> out;
  out.reserve(static_cast<std::size_t>(by_row_.nonZeros()));
  for (Index i = 0; i < by_row_.outerSize(); ++i) {
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(by_row_, i);
         it; ++it) {
      out.push_back({it.row(), it.col(), it.value()});
    }
  }
  return out;
}

std::vector<Triplet> SparseMatrix::triplets_col_order() const {
  std::vector<Triplet> out;
  out.reserve(static_cast<std::size_t>(by_col_.nonZeros()));
  for (Index j = 0; j < by_col_.outerSize(); ++j) {
    for (Eigen::SparseMatrix<double, Eigen::ColMajor>::InnerIterator it(by_col_, j);
         it; ++it) {
      out.push_back({it.row(), it.col(), it.value()});
    }
  }
  return out;
}

SparseMatrix SparseMatrix::transposed() const {
  std::vector<Triplet> flipped;
  flipped.reserve(static_cast<std::size_t>(nonzeros()));
  for (const Triplet& t : triplets_col_order()) {
    flipped.push_back({t.col, t.row, t.value});
  }
  return SparseMatrix(cols_, rows_, flipped);
}

Vector spmv(const SparseMatrix& a, const Vector& x) {
  if (x.size() != a.cols()) {
    throw std::invalid_argument("spmv: x has length " + std::to_string(x.size()) +
                                ", expected " + std::to_string(a.cols()));
  }
  Vector out = Vector::Zero(a.rows());
  const auto& m = a.by_row();
  for (Index i = 0; i < m.outerSize(); ++i) {
    double acc = 0.0;
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(m, i); it;
         ++it) {
      acc += it.value() * x[it.col()];
    }
    out[i] = acc;
  }
  return out;
}

Vector spmv_transpose(const SparseMatrix& a, const Vector& y) {
  if (y.size() != a.rows()) {
    throw std::invalid_argument("spmv_transpose: y has length " +
                                std::to_string(y.size()) + ", expected " +
                                std::to_string(a.rows()));
  }
  Vector out = Vector::Zero(a.cols());
  const auto& m = a.by_col();
  for (Index j = 0; j < m.outerSize(); ++j) {
    double acc = 0.0;
    for (Eigen::SparseMatrix<double, Eigen::ColMajor>::InnerIterator it(m, j); it;
         ++it) {
      acc += it.value() * y[it.row()];
    }
    out[j] = acc;
  }
  return out;
}

PowerIterationResult power_iteration(const SparseMatrix& a, double tol,
                                     Index max_iters, std::uint64_t seed) {
  PowerIterationResult res;
  if (a.rows() == 0 || a.cols() == 0 || a.nonzeros() == 0) {
    res.converged = true;
    return res;
  }
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Vector x(a.cols());
  for (Index i = 0; i < x.size(); ++i) x[i] = dist(gen);
  double xn = x.norm();
  if (xn == 0.0) x.setConstant(1.0), xn = x.norm();
  x /= xn;

  double sigma_prev = 0.0;
  for (Index k = 0; k < max_iters; ++k) {
    Vector w = spmv(a, x);
    double sigma = w.norm();  // Rayleigh value ||A x||_2 for unit x
    res.iterations = k + 1;
    if (sigma == 0.0) {
      // x landed in the null space; re-draw rather than report 0 for A != 0.
      for (Index i = 0; i < x.size(); ++i) x[i] = dist(gen);
      x /= x.norm();
      continue;
    }
    Vector z = spmv_transpose(a, w);
    res.sigma = sigma;
    if (k > 0 && std::abs(sigma - sigma_prev) <= tol * sigma) {
      res.converged = true;
      return res;
    }
    sigma_prev = sigma;
    double zn = z.norm();
    if (zn == 0.0) {
      res.converged = true;
      return res;
    }
    x = z / zn;
  }
  return res;
}

double estimate_spectral_norm(const SparseMatrix& a, double tol,
                              Index max_iters) {
  return power_iteration(a, tol, max_iters).sigma;
}

}  // namespace hplp
