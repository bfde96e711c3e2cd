#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symtwist/decomposition.hpp"
#include "symtwist/poly_spinor.hpp"
#include "symtwist/scalar.hpp"
#include "symtwist/sp_element.hpp"
#include "symtwist/spinor_form.hpp"
#include "symtwist/symplectic.hpp"
#include "symtwist/tensor.hpp"

namespace symtwist {

// Exact polynomial in the 2l base coordinates y^1..y^{2l}.  The zero
// polynomial carries no variable count and is compatible with any arity,
// which lets TensorT<BasePoly> default-construct entries.
class BasePoly {
 public:
  using TermMap = std::map<Exponents, Scalar, GradedLexLess>;

  BasePoly() = default;
  static BasePoly constant(int nvars, const Scalar& c);
  static BasePoly monomial(Exponents e, Scalar c = Scalar(1));

  // variable count of the support; 0 for the zero polynomial
  int nvars() const;
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // max total degree of the support; -1 when zero
  int degree() const;

  void add_term(const Exponents& e, const Scalar& c);
  Scalar coeff(const Exponents& e) const;

  BasePoly operator-() const;
  BasePoly& operator+=(const BasePoly& o);
  friend BasePoly operator+(BasePoly a, const BasePoly& b) { return a += b; }
  friend BasePoly operator-(const BasePoly& a, const BasePoly& b) { return a + (-b); }
  friend BasePoly operator*(const BasePoly& a, const BasePoly& b);
  friend BasePoly operator*(const BasePoly& a, const Scalar& c);
  friend bool operator==(const BasePoly& a, const BasePoly& b) { return a.terms_ == b.terms_; }

  // partial derivative with respect to y^a, 1-based
  BasePoly derivative(int a) const;
  Scalar eval(const std::vector<Scalar>& point) const;

  std::string str() const;

 private:
  TermMap terms_;
};

// Torsion-free symplectic connection on (R^{2l}, standard omega) with
// polynomial Christoffel symbols Gamma^k_{ab} (nabla_{e_a} e_b =
// Gamma^k_{ab} e_k).  Construction validates symmetry in (a, b) and total
// symmetry of the lowered symbols Gamma_{cab} = sum_k omega_{kc}
// Gamma^k_{ab}, which together encode torsion-freeness and nabla omega = 0;
// violations name the offending index triple.  The per-direction matrices
// Gamma_a are then sp-valued at every point, expanded here as finite series
// of sp elements over base monomials.
class FedosovConnection {
 public:
  FedosovConnection(const SymplecticSpace& space, TensorT<BasePoly> gamma);

  static FedosovConnection zero(const SymplecticSpace& space);
  // raise the first slot of a totally symmetric lowered symbol field
  static FedosovConnection from_lowered(const SymplecticSpace& space,
                                        const TensorT<BasePoly>& c);

  const SymplecticSpace& space() const { return space_; }
  int l() const { return space_.l(); }
  int dim() const { return space_.dim(); }

  const BasePoly& christoffel(int k, int a, int b) const { return gamma_.at({k, a, b}); }
  const TensorT<BasePoly>& gamma() const { return gamma_; }
  TensorT<BasePoly> lowered() const { return gamma_.lowered(space_, 1); }

  // Gamma_a as sum_beta y^beta A_{a,beta} with every A in sp
  const std::vector<std::pair<Exponents, SpElement>>& sp_series(int a) const;

  // max total degree over all symbols; -1 when flat
  int degree() const;
  bool is_flat() const;

 private:
  SymplecticSpace space_;
  TensorT<BasePoly> gamma_;
  std::vector<std::vector<std::pair<Exponents, SpElement>>> series_;
};

// coordinate curvature R^d_{jkl} of the connection, mixed slots (d, j, k, l):
// R(e_k, e_l) e_j = R^d_{jkl} e_d with
// R^d_{jkl} = d_k Gamma^d_{lj} - d_l Gamma^d_{kj}
//           + Gamma^c_{lj} Gamma^d_{kc} - Gamma^c_{kj} Gamma^d_{lc}
TensorT<BasePoly> connection_curvature(const FedosovConnection& conn);

// fully lowered curvature field R_{ijkl} = sum_d omega_{di} R^d_{jkl}
TensorT<BasePoly> connection_curvature_lowered(const FedosovConnection& conn);

// curvature trace field sigma_{ij} = sum_c R^c_{jci}, from the lowered field
TensorT<BasePoly> ricci_field(const SymplecticSpace& space, const TensorT<BasePoly>& r_lowered);

// per-base-monomial scalar slabs of a polynomial tensor field
std::map<Exponents, Tensor, GradedLexLess> tensor_slabs(const TensorT<BasePoly>& t);
// pointwise evaluation of a polynomial tensor field
Tensor eval_tensor(const TensorT<BasePoly>& t, const std::vector<Scalar>& point);

// Spinor-valued exterior form field with polynomial base coefficients:
// sum_gamma y^gamma psi_gamma with each psi_gamma a SpinorForm.  The fiber
// cap is the max over coefficients and widens as operators require.
class FieldForm {
 public:
  using TermMap = std::map<Exponents, SpinorForm, GradedLexLess>;

  FieldForm(int l, int cap);
  static FieldForm constant(const SpinorForm& value);
  static FieldForm monomial(const Exponents& base, const SpinorForm& value);

  int l() const { return l_; }
  int dim() const { return 2 * l_; }
  int cap() const { return cap_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // accumulate value at the base monomial; prunes vanished coefficients
  void add_term(const Exponents& base, const SpinorForm& value);
  SpinorForm coefficient(const Exponents& base) const;

  FieldForm& operator+=(const FieldForm& o);
  friend FieldForm operator+(FieldForm a, const FieldForm& b) { return a += b; }
  friend FieldForm operator-(const FieldForm& a, const FieldForm& b) {
    return a + b.scaled(Scalar(-1));
  }
  FieldForm scaled(const Scalar& c) const;
  // multiplication by a scalar base polynomial
  FieldForm times(const BasePoly& f) const;
  FieldForm with_cap(int new_cap) const;

  SpinorForm eval(const std::vector<Scalar>& point) const;

  // form degree when every coefficient agrees on one
  std::optional<int> form_degree() const;
  // max base total degree; -1 when zero
  int base_degree() const;

  friend bool operator==(const FieldForm& a, const FieldForm& b) {
    return a.l_ == b.l_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  int l_, cap_;
  TermMap terms_;
};

// wedge with the coordinate coframe element eps^a from the left
SpinorForm wedge_basis(int a, const SpinorForm& phi);
// metaplectic action of an sp element on the spinor factor only
SpinorForm meta_on_form(const SymplecticSpace& space, const SpElement& A, const SpinorForm& phi);

// covariant exterior derivative sum_a eps^a wedge (d_a psi + m(Gamma_a) psi);
// on 0-form fields this is the spinor covariant derivative itself
FieldForm covariant_exterior_derivative(const FedosovConnection& conn, const FieldForm& psi);

// the composition of two covariant exterior derivatives, computed through
// the fiberwise curvature action: (1/2) sum_{beta,gamma} y^{beta+gamma}
// R-hat_beta(psi_gamma).  The 1/2 converts the full antisymmetric (k, l) sum
// inside the fiber operator into the ordered wedge expansion the geometric
// composition produces.
FieldForm curvature_operator_field(const FedosovConnection& conn, const FieldForm& psi);

// apply the fiberwise block projection p^{ij} to every base coefficient
FieldForm project_field(DecompositionEngine& engine, const FieldForm& psi, int i, int j);

// twistor step starting from form degree i: project the covariant exterior
// derivative onto the top block of degree i+1.  Callers supply sections with
// fiber values in the top block of degree i.
FieldForm twistor_step(DecompositionEngine& engine, const FedosovConnection& conn, int i,
                       const FieldForm& psi);

// symplectic Dirac operator: form-degree contraction of the covariant
// derivative of a 0-form spinor field
FieldForm dirac_operator(const FedosovConnection& conn, const FieldForm& phi);

}  // namespace symtwist
