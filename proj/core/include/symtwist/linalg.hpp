#pragma once

#include <optional>
#include <vector>

#include "symtwist/sparse.hpp"

namespace symtwist {

struct RrefResult {
  // reduced rows in pivot order (ascending pivot column); zero rows dropped
  std::vector<SparseVector> rows;
  // pivot_cols[k] is the pivot column of rows[k]
  std::vector<int> pivot_cols;
  int cols = 0;

  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

// Full Gauss-Jordan reduction over the exact scalar field with the fixed
// pivot rule: columns are scanned left to right and within a column the
// lowest-index row not yet used as a pivot wins.  Deterministic output for a
// deterministic input.
RrefResult rref(const SparseMatrix& m);

int rank(const SparseMatrix& m);

// Basis of {x : M x = 0}, one vector per free column in ascending column
// order, each with unit coefficient at its free column.  Satisfies
// kernel size + rank == cols.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

// Coefficients c with sum_j c_j columns[j] == target and zeros at free
// positions; nullopt when the target lies outside the span.
std::optional<std::vector<Scalar>> solve_in_span(int dim,
                                                 const std::vector<SparseVector>& columns,
                                                 const SparseVector& target);

// Eliminates a fixed column family once and answers span membership queries
// repeatedly.  Tracks the row transform E with R = E.M so each solve is a
// sparse substitution, not a fresh elimination.
class SpanSolver {
 public:
  SpanSolver(int dim, std::vector<SparseVector> columns);

  int dim() const { return dim_; }
  int column_count() const { return ncols_; }
  int rank() const { return static_cast<int>(pivots_.size()); }

  std::optional<std::vector<Scalar>> solve(const SparseVector& target) const;
  bool contains(const SparseVector& target) const { return solve(target).has_value(); }

 private:
  int dim_, ncols_;
  // pivots_[k] = (column, row) in elimination order
  std::vector<std::pair<int, int>> pivots_;
  std::vector<SparseVector> e_rows_;  // rows of E, indexed by original row
  std::vector<char> is_pivot_row_;
  std::vector<int> pivot_col_of_row_;
};

}  // namespace symtwist
