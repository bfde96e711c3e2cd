#include "symtwist/poly_spinor.hpp"

#include <sstream>
#include <stdexcept>

namespace symtwist {

int total_degree(const Exponents& e) {
  int t = 0;
  for (int k : e) t += k;
  return t;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  int ta = total_degree(a), tb = total_degree(b);
  if (ta != tb) return ta < tb;
  return a < b;
}

PolySpinor::PolySpinor(int l, int cap) : l_(l), cap_(cap) {
  if (l < 1) throw std::invalid_argument("PolySpinor: l must be positive");
  if (cap < 0) throw std::invalid_argument("PolySpinor: negative cap");
}

PolySpinor PolySpinor::monomial(int l, int cap, Exponents e, Scalar c) {
  PolySpinor s(l, cap);
  s.add_term(e, c);
  return s;
}

int PolySpinor::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);
}

void PolySpinor::add_term(const Exponents& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != l_)
    throw std::invalid_argument("PolySpinor: multi-index arity mismatch");
  for (int k : e)
    if (k < 0) throw std::invalid_argument("PolySpinor: negative exponent");
  if (total_degree(e) > cap_)
    throw std::logic_error("PolySpinor: term exceeds degree cap (operators must widen caps)");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar PolySpinor::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

PolySpinor PolySpinor::with_cap(int new_cap) const {
  PolySpinor out(l_, new_cap);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

PolySpinor& PolySpinor::operator+=(const PolySpinor& o) {
  if (l_ != o.l_) throw std::invalid_argument("PolySpinor: mixing variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PolySpinor PolySpinor::scaled(const Scalar& c) const {
  PolySpinor out(l_, cap_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

std::optional<int> PolySpinor::parity() const {
  std::optional<int> p;
  for (const auto& [e, c] : terms_) {
    int q = total_degree(e) % 2;
    if (!p)
      p = q;
    else if (*p != q)
      return std::nullopt;
  }
  return p;
}

std::pair<PolySpinor, PolySpinor> PolySpinor::parity_split() const {
  PolySpinor even(l_, cap_), odd(l_, cap_);
  for (const auto& [e, c] : terms_)
    (total_degree(e) % 2 == 0 ? even : odd).add_term(e, c);
  return {even, odd};
}

std::string PolySpinor::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << "*x" << (k + 1);
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

PolySpinor clifford_mul(int k, const PolySpinor& s) {
  const int l = s.l();
  if (k < 1 || k > 2 * l) throw std::out_of_range("clifford_mul: basis index out of range");
  PolySpinor out(l, s.cap() + 1);
  if (k <= l) {
    // e_k.f = i x^k f
    for (const auto& [e, c] : s.terms()) {
      Exponents shifted = e;
      ++shifted[k - 1];
      out.add_term(shifted, c * Scalar::i());
    }
  } else {
    // e_{k}.f = df/dx^{k-l}
    const int v = k - l;
    for (const auto& [e, c] : s.terms()) {
      if (e[v - 1] == 0) continue;
      Exponents shifted = e;
      --shifted[v - 1];
      out.add_term(shifted, c * Scalar(e[v - 1]));
    }
  }
  return out;
}

PolySpinor clifford_mul_vector(const std::vector<Scalar>& v, const PolySpinor& s) {
  const int d = 2 * s.l();
  if (static_cast<int>(v.size()) != d)
    throw std::invalid_argument("clifford_mul_vector: coefficient arity mismatch");
  PolySpinor out(s.l(), s.cap() + 1);
  for (int k = 1; k <= d; ++k) {
    if (v[k - 1].is_zero()) continue;
    out += clifford_mul(k, s).scaled(v[k - 1]);
  }
  return out;
}

PolySpinor meta_action(const SymplecticSpace& space, const SpElement& A, const PolySpinor& s) {
  if (space.l() != s.l() || A.l() != s.l())
    throw std::invalid_argument("meta_action: dimension mismatch");
  Tensor up = A.raised_both(space);
  PolySpinor out(s.l(), s.cap() + 2);
  const Scalar half_i = Scalar::i() * Scalar::rational(1, 2);
  for (int a = 1; a <= space.dim(); ++a)
    for (int b = 1; b <= space.dim(); ++b) {
      const Scalar& c = up.at({a, b});
      if (c.is_zero()) continue;
      out += clifford_mul(a, clifford_mul(b, s)).scaled(half_i * c);
    }
  return out;
}

std::vector<Scalar> sp_image_of_basis(const SpElement& A, int k) {
  std::vector<Scalar> v(A.dim());
  for (int a = 1; a <= A.dim(); ++a) v[a - 1] = A.entry(a, k);
  return v;
}

}  // namespace symtwist
