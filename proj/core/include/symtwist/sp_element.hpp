#pragma once

#include <stdexcept>

#include "symtwist/rng.hpp"
#include "symtwist/symplectic.hpp"
#include "symtwist/tensor.hpp"

namespace symtwist {

// Element of sp(V, omega) stored as the mixed endomorphism matrix A^a_b
// (A e_b = sum_a A^a_b e_a).  Construction validates the membership condition
// omega(A v, w) + omega(v, A w) = 0, equivalently symmetry of the lowered
// matrix A_ij = omega(A e_j, e_i).
class SpElement {
 public:
  SpElement(const SymplecticSpace& space, Tensor mixed)
      : l_(space.l()), mixed_(std::move(mixed)) {
    if (mixed_.dim() != space.dim() || mixed_.rank() != 2)
      throw std::invalid_argument("SpElement: need a rank-2 matrix over V");
    Tensor low = lowered_matrix(space, mixed_);
    if (!symmetric_in(low, 1, 2))
      throw std::invalid_argument("SpElement: matrix is not in sp(V, omega)");
  }

  int l() const { return l_; }
  int dim() const { return 2 * l_; }
  const Tensor& mixed() const { return mixed_; }

  // entry A^a_b
  const Scalar& entry(int a, int b) const { return mixed_.at({a, b}); }

  // A_ij = omega(A e_j, e_i) = sum_k A^k_j omega(k, i); symmetric
  static Tensor lowered_matrix(const SymplecticSpace& space, const Tensor& mixed) {
    const int d = space.dim();
    Tensor low(d, 2);
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) {
        Scalar acc;
        for (int k = 1; k <= d; ++k) {
          int w = space.omega_sign(k, i);
          if (w == 1)
            acc += mixed.at({k, j});
          else if (w == -1)
            acc -= mixed.at({k, j});
        }
        low.at({i, j}) = acc;
      }
    return low;
  }

  Tensor lowered(const SymplecticSpace& space) const { return lowered_matrix(space, mixed_); }

  // lowered matrix with both slots raised; feeds the quadratic Clifford
  // realization of the derived metaplectic action
  Tensor raised_both(const SymplecticSpace& space) const {
    return lowered(space).raised(space, 1).raised(space, 2);
  }

  // inverse of lowered_matrix: mixed A with omega(A e_j, e_i) = B_ij
  static SpElement from_lowered(const SymplecticSpace& space, const Tensor& symmetric) {
    if (!symmetric_in(symmetric, 1, 2))
      throw std::invalid_argument("SpElement::from_lowered: matrix not symmetric");
    // A^a_b = sum_c omega_up(a,c) B_cb reproduces B under lowered_matrix
    Tensor mixed = symmetric.raised(space, 1);
    return SpElement(space, mixed);
  }

  friend bool operator==(const SpElement& a, const SpElement& b) {
    return a.mixed_ == b.mixed_;
  }

  SpElement commutator(const SymplecticSpace& space, const SpElement& o) const {
    const int d = dim();
    Tensor out(d, 2);
    for (int a = 1; a <= d; ++a)
      for (int b = 1; b <= d; ++b) {
        Scalar acc;
        for (int k = 1; k <= d; ++k)
          acc += entry(a, k) * o.entry(k, b) - o.entry(a, k) * entry(k, b);
        out.at({a, b}) = acc;
      }
    return SpElement(space, out);
  }

 private:
  int l_;
  Tensor mixed_;
};

// random sp element via a random small-integer symmetric lowered matrix
inline SpElement random_sp(const SymplecticSpace& space, Rng& rng) {
  const int d = space.dim();
  Tensor sym(d, 2);
  for (int i = 1; i <= d; ++i)
    for (int j = i; j <= d; ++j) {
      Scalar v(rng.next_int(-3, 3));
      sym.at({i, j}) = v;
      sym.at({j, i}) = v;
    }
  return SpElement::from_lowered(space, sym);
}

// random symmetric rank-2 tensor over small integers (sigma samples)
inline Tensor random_symmetric(const SymplecticSpace& space, Rng& rng) {
  const int d = space.dim();
  Tensor sym(d, 2);
  for (int i = 1; i <= d; ++i)
    for (int j = i; j <= d; ++j) {
      Scalar v(rng.next_int(-3, 3));
      sym.at({i, j}) = v;
      sym.at({j, i}) = v;
    }
  return sym;
}

}  // namespace symtwist
