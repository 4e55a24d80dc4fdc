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

#ifndef HPLP_SPARSE_MATRIX_HPP_
#define HPLP_SPARSE_MATRIX_HPP_

#include <cstdint>
#include <vector>

#include "Eigen/Core"
#include "Eigen/SparseCore"

namespace hplp {

using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

struct Triplet {
  Index row = 0;
  Index col = 0;
  double value = 0.0;
};

// Sparse matrix held in both row-compressed and column-compressed form.
// A-products traverse the row-major copy and A^T-products the column-major
// copy, so both kernels run unit-stride with a fixed summation order. The
// memory doubling is deliberate: the PDHG operator needs A*x and A^T*y every
// iteration. Immutable after construction; safe to share across threads.
class SparseMatrix {
 public:
  // Throws std::invalid_argument on out-of-range indices, non-finite values,
  // or duplicate (row, col) pairs. Duplicates are a hard error, not summed.
  SparseMatrix(Index n_rows, Index n_cols, const std::vector<Triplet>& entries);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index nonzeros() const { return by_row_.nonZeros(); }

  const Eigen::SparseMatrix<double, Eigen::RowMajor>& by_row() const {
    return by_row_;
  }
  const Eigen::SparseMatrix<double, Eigen::ColMajor>& by_col() const {
    return by_col_;
  }

  // Stored (row, col, value) triples in row-major / column-major traversal
  // order. Both views contain the same set of triples.
  std::vector<Triplet> triplets_row_order() const;
  std::vector<Triplet> triplets_col_order() const;

  // Explicit transpose copy. spmv on the transpose reproduces
  // spmv_transpose on the original bit for bit (same summation order).
  SparseMatrix transposed() const;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  Eigen::SparseMatrix<double, Eigen::RowMajor> by_row_;
  Eigen::SparseMatrix<double, Eigen::ColMajor> by_col_;
};

// A*x with deterministic per-row accumulation in column order.
// Throws std::invalid_argument on dimension mismatch.
Vector spmv(const SparseMatrix& a, const Vector& x);

// A^T*y with deterministic per-column accumulation in row order.
Vector spmv_transpose(const SparseMatrix& a, const Vector& y);

struct PowerIterationResult {
  double sigma = 0.0;  // Rayleigh estimate; always a lower bound on ||A||_2.
  Index iterations = 0;
  bool converged = false;
};

inline constexpr std::uint64_t kDefaultPowerSeed = 12345;

// Power iteration on A^T A from a seeded random start vector.
PowerIterationResult power_iteration(const SparseMatrix& a, double tol,
                                     Index max_iters,
                                     std::uint64_t seed = kDefaultPowerSeed);

// Returns sigma with sigma <= ||A||_2 <= sigma*(1+tol) under power-iteration
// convergence. Returns 0 for the zero matrix; the caller must guard division.
// Callers that derive a step size multiply by (1+tol) before use.
double estimate_spectral_norm(const SparseMatrix& a, double tol = 1e-4,
                              Index max_iters = 5000);

}  // namespace hplp

#endif  // HPLP_SPARSE_MATRIX_HPP_
