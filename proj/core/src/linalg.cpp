#include "symtwist/linalg.hpp"

#include <stdexcept>

namespace symtwist {

namespace {

// Shared elimination core.  When transform is non-null it is kept in sync so
// that (*rows)[r] = (*transform)[r] . original for every r.
void eliminate(std::vector<SparseVector>& rows, int cols,
               std::vector<std::pair<int, int>>& pivots,
               std::vector<SparseVector>* transform) {
  const int nrows = static_cast<int>(rows.size());
  std::vector<char> used(nrows, 0);
  for (int c = 0; c < cols; ++c) {
    int pr = -1;
    for (int r = 0; r < nrows; ++r) {
      if (used[r]) continue;
      if (!rows[r].coeff(c).is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    used[pr] = 1;
    pivots.emplace_back(c, pr);
    Scalar inv = rows[pr].coeff(c).inverse();
    rows[pr].scale(inv);
    if (transform) (*transform)[pr].scale(inv);
    for (int r = 0; r < nrows; ++r) {
      if (r == pr) continue;
      Scalar f = rows[r].coeff(c);
      if (f.is_zero()) continue;
      Scalar nf = -f;
      rows[r].axpy(nf, rows[pr]);
      if (transform) (*transform)[r].axpy(nf, (*transform)[pr]);
    }
  }
}

}  // namespace

RrefResult rref(const SparseMatrix& m) {
  auto rows = m.row_list();
  std::vector<std::pair<int, int>> pivots;
  eliminate(rows, m.cols(), pivots, nullptr);
  RrefResult out;
  out.cols = m.cols();
  out.rows.reserve(pivots.size());
  out.pivot_cols.reserve(pivots.size());
  for (const auto& [c, r] : pivots) {
    out.pivot_cols.push_back(c);
    out.rows.push_back(rows[r]);
  }
  return out;
}

int rank(const SparseMatrix& m) { return rref(m).rank(); }

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  RrefResult r = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : r.pivot_cols) is_pivot[c] = 1;
  std::vector<SparseVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    VectorBuilder b;
    b.add(f, Scalar(1));
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
      Scalar v = r.rows[k].coeff(f);
      if (!v.is_zero()) b.add(r.pivot_cols[k], -v);
    }
    basis.push_back(b.take());
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve_in_span(int dim,
                                                 const std::vector<SparseVector>& columns,
                                                 const SparseVector& target) {
  SpanSolver s(dim, columns);
  return s.solve(target);
}

SpanSolver::SpanSolver(int dim, std::vector<SparseVector> columns)
    : dim_(dim), ncols_(static_cast<int>(columns.size())) {
  // row r of the working matrix collects coefficient r of every column
  std::vector<std::vector<SparseVector::Term>> rowterms(dim_);
  for (int j = 0; j < ncols_; ++j)
    for (const auto& [i, s] : columns[j]) {
      if (i < 0 || i >= dim_) throw std::invalid_argument("SpanSolver: index out of range");
      rowterms[i].emplace_back(j, s);
    }
  std::vector<SparseVector> rows;
  rows.reserve(dim_);
  for (auto& t : rowterms) rows.push_back(SparseVector::from_sorted(std::move(t)));

  e_rows_.reserve(dim_);
  for (int r = 0; r < dim_; ++r) e_rows_.push_back(SparseVector::single(r, Scalar(1)));

  eliminate(rows, ncols_, pivots_, &e_rows_);

  is_pivot_row_.assign(dim_, 0);
  pivot_col_of_row_.assign(dim_, -1);
  for (const auto& [c, r] : pivots_) {
    is_pivot_row_[r] = 1;
    pivot_col_of_row_[r] = c;
  }
}

namespace {

Scalar sparse_dot(const SparseVector& a, const SparseVector& b) {
  Scalar acc;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first)
      ++ia;
    else if (ib->first < ia->first)
      ++ib;
    else {
      acc += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

}  // namespace

std::optional<std::vector<Scalar>> SpanSolver::solve(const SparseVector& target) const {
  std::vector<Scalar> coeffs(ncols_);
  for (int r = 0; r < dim_; ++r) {
    Scalar u = sparse_dot(e_rows_[r], target);
    if (is_pivot_row_[r]) {
      coeffs[pivot_col_of_row_[r]] = std::move(u);
    } else if (!u.is_zero()) {
      return std::nullopt;  // outside the span
    }
  }
  return coeffs;
}

}  // namespace symtwist
