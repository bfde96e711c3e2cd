#pragma once

#include <map>
#include <utility>
#include <vector>

#include "symtwist/scalar.hpp"

namespace symtwist {

// Sparse column vector: terms sorted by index, no explicit zeros.
class SparseVector {
 public:
  using Term = std::pair<int, Scalar>;

  SparseVector() = default;
  static SparseVector single(int index, Scalar value);
  // pre: terms sorted by strictly increasing index, values nonzero
  static SparseVector from_sorted(std::vector<Term> terms);
  static SparseVector from_map(const std::map<int, Scalar>& terms);

  Scalar coeff(int index) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t nnz() const { return terms_.size(); }
  // pre: !is_zero()
  int leading_index() const { return terms_.front().first; }
  const Scalar& leading_value() const { return terms_.front().second; }

  // this += c * v
  void axpy(const Scalar& c, const SparseVector& v);
  void scale(const Scalar& c);
  SparseVector scaled(const Scalar& c) const;

  friend SparseVector operator+(const SparseVector& a, const SparseVector& b);
  friend SparseVector operator-(const SparseVector& a, const SparseVector& b);
  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.terms_ == b.terms_;
  }

  std::vector<Term>::const_iterator begin() const { return terms_.begin(); }
  std::vector<Term>::const_iterator end() const { return terms_.end(); }

 private:
  std::vector<Term> terms_;
};

// Accumulator for building sparse vectors out of unordered contributions.
class VectorBuilder {
 public:
  void add(int index, const Scalar& value);
  SparseVector take();

 private:
  std::map<int, Scalar> acc_;
};

// Sparse matrix with explicit dimensions; entries hold no stored zeros and
// iterate in deterministic (row, col) order.
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  static SparseMatrix identity(int n);
  // columns[j] becomes column j
  static SparseMatrix from_columns(int rows, const std::vector<SparseVector>& columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  void add_to(int r, int c, const Scalar& v);
  void set(int r, int c, const Scalar& v);
  Scalar coeff(int r, int c) const;

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix scaled(const Scalar& c) const;
  SparseVector apply(const SparseVector& v) const;  // M * v

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

  std::vector<SparseVector> row_list() const;
  SparseVector column(int j) const;

  const std::map<std::pair<int, int>, Scalar>& entries() const { return entries_; }

 private:
  int rows_, cols_;
  std::map<std::pair<int, int>, Scalar> entries_;
};

}  // namespace symtwist
