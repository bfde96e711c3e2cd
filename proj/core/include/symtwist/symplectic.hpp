#pragma once

#include <stdexcept>
#include <vector>

#include "symtwist/scalar.hpp"

namespace symtwist {

// Standard symplectic vector space of dimension 2l with 1-based indices.
// The basis e_1..e_l spans the Lagrangian L and e_{l+1}..e_{2l} spans L'.
// omega(i, i+l) = 1 for i <= l, omega(i, i-l) = -1 for i > l, zero otherwise;
// the raised matrix omega_up solves sum_k omega(i,k) omega_up(j,k) = delta_ij
// and coincides entrywise with omega for this basis.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(int l) : l_(l) {
    if (l < 1) throw std::invalid_argument("SymplecticSpace: l must be positive");
  }

  int l() const { return l_; }
  int dim() const { return 2 * l_; }

  int omega_sign(int i, int j) const {
    check(i);
    check(j);
    if (i <= l_ && j == i + l_) return 1;
    if (i > l_ && j == i - l_) return -1;
    return 0;
  }
  int omega_up_sign(int i, int j) const { return omega_sign(i, j); }

  Scalar omega(int i, int j) const { return Scalar(omega_sign(i, j)); }
  Scalar omega_up(int i, int j) const { return Scalar(omega_up_sign(i, j)); }

 private:
  void check(int i) const {
    if (i < 1 || i > 2 * l_) throw std::out_of_range("SymplecticSpace: index out of range");
  }
  int l_;
};

}  // namespace symtwist
