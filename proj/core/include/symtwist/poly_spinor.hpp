#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symtwist/scalar.hpp"
#include "symtwist/sp_element.hpp"
#include "symtwist/symplectic.hpp"

namespace symtwist {

// exponent multi-index over the l Lagrangian coordinates x^1..x^l
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// graded lexicographic: total degree first, then lexicographic tie-break;
// fixed ordering keeps every enumerated basis reproducible
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Truncated polynomial symplectic spinor: element of C[x^1..x^l] with total
// degree capped at N.  The cap is bookkeeping for the ambient truncated
// space; arithmetic that would exceed it throws instead of silently
// truncating, and every Clifford-order-c operation targets a cap-(N+c) copy.
class PolySpinor {
 public:
  using TermMap = std::map<Exponents, Scalar, GradedLexLess>;

  PolySpinor(int l, int cap);
  static PolySpinor monomial(int l, int cap, Exponents e, Scalar c = Scalar(1));

  int l() const { return l_; }
  int cap() const { return cap_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // max total degree of the support; -1 when zero
  int degree() const;

  void add_term(const Exponents& e, const Scalar& c);
  Scalar coeff(const Exponents& e) const;

  // same terms viewed in a cap-N' space; N' must cover the support
  PolySpinor with_cap(int new_cap) const;

  PolySpinor& operator+=(const PolySpinor& o);
  friend PolySpinor operator+(PolySpinor a, const PolySpinor& b) { return a += b; }
  friend PolySpinor operator-(const PolySpinor& a, const PolySpinor& b) {
    return a + b.scaled(Scalar(-1));
  }
  PolySpinor scaled(const Scalar& c) const;

  // mathematical equality: same l and identical term maps (caps are ambient
  // bookkeeping, not part of the value)
  friend bool operator==(const PolySpinor& a, const PolySpinor& b) {
    return a.l_ == b.l_ && a.terms_ == b.terms_;
  }

  // 0 = even total degree, 1 = odd; nullopt for mixed or zero
  std::optional<int> parity() const;
  // (even part, odd part); parts sum to the original
  std::pair<PolySpinor, PolySpinor> parity_split() const;

  std::string str() const;

 private:
  int l_, cap_;
  TermMap terms_;
};

// Symplectic Clifford multiplication by the basis vector e_k (1-based):
// e_k.f = i*x^k*f for k <= l, e_{k+l}.f = df/dx^k.  Clifford order 1: the
// result lives in the cap+1 space.
PolySpinor clifford_mul(int k, const PolySpinor& s);

// multiplication by a general vector v = sum_k v_k e_k
PolySpinor clifford_mul_vector(const std::vector<Scalar>& v, const PolySpinor& s);

// Derived metaplectic action m(A) = (i/2) sum_{a,b} A^{ab} e_a.e_b. where
// A^{ab} is the lowered sp matrix with both slots raised.  Clifford order 2,
// parity preserving; pinned (including normalization) by the intertwining
// property [m(A), v.] = (Av). which the tests verify directly.
PolySpinor meta_action(const SymplecticSpace& space, const SpElement& A, const PolySpinor& s);

// image vector A e_k as coefficients over the basis
std::vector<Scalar> sp_image_of_basis(const SpElement& A, int k);

}  // namespace symtwist
