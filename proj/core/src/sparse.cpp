#include "symtwist/sparse.hpp"

#include <stdexcept>

namespace symtwist {

SparseVector SparseVector::single(int index, Scalar value) {
  SparseVector v;
  if (!value.is_zero()) v.terms_.emplace_back(index, std::move(value));
  return v;
}

SparseVector SparseVector::from_sorted(std::vector<Term> terms) {
  SparseVector v;
  v.terms_ = std::move(terms);
  for (std::size_t k = 1; k < v.terms_.size(); ++k)
    if (v.terms_[k - 1].first >= v.terms_[k].first)
      throw std::invalid_argument("SparseVector::from_sorted: indices not increasing");
  return v;
}

SparseVector SparseVector::from_map(const std::map<int, Scalar>& terms) {
  SparseVector v;
  v.terms_.reserve(terms.size());
  for (const auto& [i, s] : terms)
    if (!s.is_zero()) v.terms_.emplace_back(i, s);
  return v;
}

Scalar SparseVector::coeff(int index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, int i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) return it->second;
  return Scalar();
}

void SparseVector::axpy(const Scalar& c, const SparseVector& v) {
  if (c.is_zero() || v.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + v.terms_.size());
  auto a = terms_.begin();
  auto b = v.terms_.begin();
  while (a != terms_.end() || b != v.terms_.end()) {
    if (b == v.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->first < a->first) {
      Scalar s = c * b->second;
      if (!s.is_zero()) out.emplace_back(b->first, std::move(s));
      ++b;
    } else {
      Scalar s = a->second + c * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

void SparseVector::scale(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto& [i, s] : terms_) s *= c;
}

SparseVector SparseVector::scaled(const Scalar& c) const {
  SparseVector v = *this;
  v.scale(c);
  return v;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  SparseVector v = a;
  v.axpy(Scalar(1), b);
  return v;
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
  SparseVector v = a;
  v.axpy(Scalar(-1), b);
  return v;
}

void VectorBuilder::add(int index, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = acc_.emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) acc_.erase(it);
  }
}

SparseVector VectorBuilder::take() {
  SparseVector v = SparseVector::from_map(acc_);
  acc_.clear();
  return v;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Scalar(1));
  return m;
}

SparseMatrix SparseMatrix::from_columns(int rows, const std::vector<SparseVector>& columns) {
  SparseMatrix m(rows, static_cast<int>(columns.size()));
  for (int j = 0; j < m.cols_; ++j)
    for (const auto& [i, s] : columns[j]) m.set(i, j, s);
  return m;
}

void SparseMatrix::add_to(int r, int c, const Scalar& v) {
  if (v.is_zero()) return;
  auto key = std::make_pair(r, c);
  auto [it, inserted] = entries_.emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
  auto key = std::make_pair(r, c);
  if (v.is_zero())
    entries_.erase(key);
  else
    entries_[key] = v;
}

Scalar SparseMatrix::coeff(int r, int c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Scalar() : it->second;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix m(cols_, rows_);
  for (const auto& [rc, s] : entries_) m.set(rc.second, rc.first, s);
  return m;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("SparseMatrix::*: shape mismatch");
  SparseMatrix out(rows_, o.cols_);
  // group o by row for cache of row slices
  auto orows = o.row_list();
  for (const auto& [rc, s] : entries_) {
    const auto& [r, c] = rc;
    for (const auto& [j, t] : orows[c]) out.add_to(r, j, s * t);
  }
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("SparseMatrix::+: shape mismatch");
  SparseMatrix out = *this;
  for (const auto& [rc, s] : o.entries_) out.add_to(rc.first, rc.second, s);
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  return *this + o.scaled(Scalar(-1));
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
  SparseMatrix out(rows_, cols_);
  if (c.is_zero()) return out;
  for (const auto& [rc, s] : entries_) out.set(rc.first, rc.second, s * c);
  return out;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  VectorBuilder b;
  for (const auto& [rc, s] : entries_) {
    Scalar x = v.coeff(rc.second);
    if (!x.is_zero()) b.add(rc.first, s * x);
  }
  return b.take();
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::vector<SparseVector> SparseMatrix::row_list() const {
  std::vector<std::vector<SparseVector::Term>> rows(rows_);
  for (const auto& [rc, s] : entries_) rows[rc.first].emplace_back(rc.second, s);
  std::vector<SparseVector> out;
  out.reserve(rows_);
  for (auto& r : rows) out.push_back(SparseVector::from_sorted(std::move(r)));
  return out;
}

SparseVector SparseMatrix::column(int j) const {
  // entries iterate in (row, col) order, so a column scan is O(nnz); column
  // extraction is not on the elimination hot path.
  std::vector<SparseVector::Term> terms;
  for (const auto& [rc, s] : entries_)
    if (rc.second == j) terms.emplace_back(rc.first, s);
  return SparseVector::from_sorted(std::move(terms));
}

}  // namespace symtwist
