#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symtwist/poly_spinor.hpp"
#include "symtwist/scalar.hpp"

namespace symtwist {

// exterior form multi-index: strictly increasing tuple over 1..2l
using FormIndex = std::vector<int>;

// wedge eps^i from the left; nullopt when i already occurs
std::optional<std::pair<FormIndex, int>> wedge_insert(const FormIndex& f, int i);
// contraction against the dual pairing eps^a(e_b) = delta; nullopt when absent
std::optional<std::pair<FormIndex, int>> contract_index(const FormIndex& f, int i);

// oscillator weight: |alpha| - #(F in 1..l) + #(F in l+1..2l)
int oscillator_weight(int l, const FormIndex& f, const Exponents& e);

struct FormKey {
  FormIndex form;
  Exponents exps;
  friend bool operator==(const FormKey&, const FormKey&) = default;
};

// form degree, then lex on the form tuple, then graded lex on exponents
struct FormKeyLess {
  bool operator()(const FormKey& a, const FormKey& b) const;
};

// Element of (exterior forms) tensor (degree-capped polynomial spinors).
// Mixed form degree is allowed; the cap policy matches PolySpinor: writes
// past the cap throw, operators target widened copies.
class SpinorForm {
 public:
  using TermMap = std::map<FormKey, Scalar, FormKeyLess>;

  SpinorForm(int l, int cap);
  static SpinorForm term(int l, int cap, FormIndex f, Exponents e, Scalar c = Scalar(1));
  static SpinorForm from_poly(FormIndex f, const PolySpinor& s);

  int l() const { return l_; }
  int dim() const { return 2 * l_; }
  int cap() const { return cap_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const FormIndex& f, const Exponents& e, const Scalar& c);
  Scalar coeff(const FormIndex& f, const Exponents& e) const;
  PolySpinor poly_at(const FormIndex& f) const;

  SpinorForm with_cap(int new_cap) const;

  SpinorForm& operator+=(const SpinorForm& o);
  friend SpinorForm operator+(SpinorForm a, const SpinorForm& b) { return a += b; }
  friend SpinorForm operator-(const SpinorForm& a, const SpinorForm& b) {
    return a + b.scaled(Scalar(-1));
  }
  SpinorForm scaled(const Scalar& c) const;

  friend bool operator==(const SpinorForm& a, const SpinorForm& b) {
    return a.l_ == b.l_ && a.terms_ == b.terms_;
  }

  // each returns a value only when every term agrees
  std::optional<int> form_degree() const;
  std::optional<int> weight() const;
  std::optional<int> parity() const;

  // split into (form degree, weight) homogeneous components
  std::map<std::pair<int, int>, SpinorForm> sector_split() const;

  std::string str() const;

 private:
  int l_, cap_;
  TermMap terms_;
};

}  // namespace symtwist
