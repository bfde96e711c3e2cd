#pragma once

#include <stdexcept>
#include <vector>

#include "symtwist/scalar.hpp"
#include "symtwist/symplectic.hpp"

namespace symtwist {

// Dense coordinate array of fixed rank over a 2l-dimensional space, 1-based
// indices throughout.  The value type V needs default construction (= zero),
// +=, unary -, * by Scalar and ==.  Index raising/lowering follows the
// convention: raise contracts omega_up(i,c) against slot value c, lower
// contracts the slot value t against omega(t,i); both are sign-flipped
// l-shifts for the standard basis, so they stay exact for any V.
template <class V>
class TensorT {
 public:
  TensorT(int dim, int rank)
      : dim_(dim), rank_(rank), data_(size_of(dim, rank)) {}

  int dim() const { return dim_; }
  int rank() const { return rank_; }

  const V& at(const std::vector<int>& idx) const { return data_[flat(idx)]; }
  V& at(const std::vector<int>& idx) { return data_[flat(idx)]; }

  bool is_zero() const {
    static const V zero{};
    for (const V& v : data_)
      if (!(v == zero)) return false;
    return true;
  }

  TensorT raised(const SymplecticSpace& space, int slot) const {
    return shifted(space, slot, /*raise=*/true);
  }
  TensorT lowered(const SymplecticSpace& space, int slot) const {
    return shifted(space, slot, /*raise=*/false);
  }

  TensorT& operator+=(const TensorT& o) {
    check_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  friend TensorT operator+(TensorT a, const TensorT& b) { return a += b; }
  friend TensorT operator-(TensorT a, const TensorT& b) {
    a.check_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += -b.data_[k];
    return a;
  }
  TensorT scaled(const Scalar& c) const {
    TensorT out(dim_, rank_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * c;
    return out;
  }
  friend bool operator==(const TensorT& a, const TensorT& b) {
    return a.dim_ == b.dim_ && a.rank_ == b.rank_ && a.data_ == b.data_;
  }

  // odometer over 1-based index tuples; returns false when exhausted
  static bool advance(std::vector<int>& idx, int dim) {
    for (int k = static_cast<int>(idx.size()) - 1; k >= 0; --k) {
      if (idx[k] < dim) {
        ++idx[k];
        return true;
      }
      idx[k] = 1;
    }
    return false;
  }
  std::vector<int> first_index() const { return std::vector<int>(rank_, 1); }

 private:
  static std::size_t size_of(int dim, int rank) {
    std::size_t n = 1;
    for (int k = 0; k < rank; ++k) n *= static_cast<std::size_t>(dim);
    return n;
  }
  std::size_t flat(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != rank_)
      throw std::invalid_argument("TensorT: wrong index rank");
    std::size_t f = 0;
    for (int k = 0; k < rank_; ++k) {
      if (idx[k] < 1 || idx[k] > dim_) throw std::out_of_range("TensorT: index out of range");
      f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(idx[k] - 1);
    }
    return f;
  }
  void check_shape(const TensorT& o) const {
    if (dim_ != o.dim_ || rank_ != o.rank_)
      throw std::invalid_argument("TensorT: shape mismatch");
  }

  TensorT shifted(const SymplecticSpace& space, int slot, bool raise) const {
    if (slot < 1 || slot > rank_) throw std::out_of_range("TensorT: slot out of range");
    if (space.dim() != dim_) throw std::invalid_argument("TensorT: space mismatch");
    const int l = space.l();
    TensorT out(dim_, rank_);
    std::vector<int> idx = first_index();
    do {
      std::vector<int> src = idx;
      const int i = idx[slot - 1];
      // raise: T'(..i..) = [i<=l] T(..i+l..) - [i>l] T(..i-l..)
      // lower: T'(..i..) = [i>l] T(..i-l..) - [i<=l] T(..i+l..)
      int sign;
      if (i <= l) {
        src[slot - 1] = i + l;
        sign = raise ? 1 : -1;
      } else {
        src[slot - 1] = i - l;
        sign = raise ? -1 : 1;
      }
      V v = at(src);
      out.at(idx) = (sign > 0) ? v : -v;
    } while (advance(idx, dim_));
    return out;
  }

  int dim_, rank_;
  std::vector<V> data_;
};

using Tensor = TensorT<Scalar>;

inline bool symmetric_in(const Tensor& t, int slot_a, int slot_b) {
  std::vector<int> idx = t.first_index();
  do {
    std::vector<int> swapped = idx;
    std::swap(swapped[slot_a - 1], swapped[slot_b - 1]);
    if (!(t.at(idx) == t.at(swapped))) return false;
  } while (Tensor::advance(idx, t.dim()));
  return true;
}

}  // namespace symtwist
