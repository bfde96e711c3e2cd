#include "symtwist/fedosov.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "symtwist/curvature.hpp"
#include "symtwist/operators.hpp"

namespace symtwist {

namespace {

Exponents add_exps(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) throw std::invalid_argument("BasePoly: variable count mismatch");
  Exponents out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

std::string monomial_str(const Exponents& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!first) os << "*";
    os << "y" << (k + 1);
    if (e[k] > 1) os << "^" << e[k];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

}  // namespace

BasePoly BasePoly::constant(int nvars, const Scalar& c) {
  BasePoly out;
  out.add_term(Exponents(nvars, 0), c);
  return out;
}

BasePoly BasePoly::monomial(Exponents e, Scalar c) {
  BasePoly out;
  out.add_term(e, c);
  return out;
}

int BasePoly::nvars() const {
  return terms_.empty() ? 0 : static_cast<int>(terms_.begin()->first.size());
}

int BasePoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    if (total_degree(e) > d) d = total_degree(e);
  return d;
}

void BasePoly::add_term(const Exponents& e, const Scalar& c) {
  for (int x : e)
    if (x < 0) throw std::invalid_argument("BasePoly: negative exponent");
  if (!terms_.empty() && e.size() != terms_.begin()->first.size())
    throw std::invalid_argument("BasePoly: variable count mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar BasePoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

BasePoly BasePoly::operator-() const {
  BasePoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

BasePoly& BasePoly::operator+=(const BasePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BasePoly operator*(const BasePoly& a, const BasePoly& b) {
  BasePoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exps(ea, eb), ca * cb);
  return out;
}

BasePoly operator*(const BasePoly& a, const Scalar& c) {
  BasePoly out;
  if (c.is_zero()) return out;
  for (const auto& [e, v] : a.terms_) out.terms_.emplace(e, v * c);
  return out;
}

BasePoly BasePoly::derivative(int a) const {
  BasePoly out;
  if (terms_.empty()) return out;
  if (a < 1 || a > nvars()) throw std::out_of_range("BasePoly: derivative variable out of range");
  for (const auto& [e, c] : terms_) {
    if (e[a - 1] == 0) continue;
    Exponents shifted = e;
    --shifted[a - 1];
    out.add_term(shifted, c * Scalar(e[a - 1]));
  }
  return out;
}

Scalar BasePoly::eval(const std::vector<Scalar>& point) const {
  Scalar acc;
  for (const auto& [e, c] : terms_) {
    if (e.size() != point.size()) throw std::invalid_argument("BasePoly: point arity mismatch");
    Scalar term = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int p = 0; p < e[k]; ++p) term *= point[k];
    acc += term;
  }
  return acc;
}

std::string BasePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*" << monomial_str(e);
    first = false;
  }
  return os.str();
}

FedosovConnection::FedosovConnection(const SymplecticSpace& space, TensorT<BasePoly> gamma)
    : space_(space), gamma_(std::move(gamma)) {
  const int d = space_.dim();
  if (gamma_.dim() != d || gamma_.rank() != 3)
    throw std::invalid_argument("connection: need a rank-3 symbol array over the 2l coordinates");
  std::vector<int> idx = gamma_.first_index();
  do {
    const BasePoly& p = gamma_.at(idx);
    if (!p.is_zero() && p.nvars() != d)
      throw std::invalid_argument("connection: symbols must be polynomials in the 2l base coordinates");
  } while (TensorT<BasePoly>::advance(idx, d));

  for (int k = 1; k <= d; ++k)
    for (int a = 1; a <= d; ++a)
      for (int b = a + 1; b <= d; ++b)
        if (!(gamma_.at({k, a, b}) == gamma_.at({k, b, a}))) {
          std::ostringstream os;
          os << "connection: symbols not symmetric in the lower pair at (" << k << ", " << a
             << ", " << b << ")";
          throw std::invalid_argument(os.str());
        }

  TensorT<BasePoly> low = gamma_.lowered(space_, 1);
  for (int c = 1; c <= d; ++c)
    for (int a = c + 1; a <= d; ++a)
      for (int b = 1; b <= d; ++b)
        if (!(low.at({c, a, b}) == low.at({a, c, b}))) {
          std::ostringstream os;
          os << "connection: lowered symbols not totally symmetric at (" << c << ", " << a << ", "
             << b << ")";
          throw std::invalid_argument(os.str());
        }

  series_.resize(d);
  for (int a = 1; a <= d; ++a) {
    std::map<Exponents, Tensor, GradedLexLess> slabs;
    for (int k = 1; k <= d; ++k)
      for (int b = 1; b <= d; ++b)
        for (const auto& [e, coeff] : gamma_.at({k, a, b}).terms()) {
          auto [it, inserted] = slabs.try_emplace(e, Tensor(d, 2));
          it->second.at({k, b}) += coeff;
        }
    for (const auto& [e, slab] : slabs) series_[a - 1].emplace_back(e, SpElement(space_, slab));
  }
}

FedosovConnection FedosovConnection::zero(const SymplecticSpace& space) {
  return FedosovConnection(space, TensorT<BasePoly>(space.dim(), 3));
}

FedosovConnection FedosovConnection::from_lowered(const SymplecticSpace& space,
                                                  const TensorT<BasePoly>& c) {
  return FedosovConnection(space, c.raised(space, 1));
}

const std::vector<std::pair<Exponents, SpElement>>& FedosovConnection::sp_series(int a) const {
  if (a < 1 || a > dim()) throw std::out_of_range("connection: direction index out of range");
  return series_[a - 1];
}

int FedosovConnection::degree() const {
  int d = -1;
  std::vector<int> idx = gamma_.first_index();
  do {
    if (gamma_.at(idx).degree() > d) d = gamma_.at(idx).degree();
  } while (TensorT<BasePoly>::advance(idx, gamma_.dim()));
  return d;
}

bool FedosovConnection::is_flat() const { return connection_curvature(*this).is_zero(); }

TensorT<BasePoly> connection_curvature(const FedosovConnection& conn) {
  const int dim = conn.dim();
  TensorT<BasePoly> out(dim, 4);
  for (int d = 1; d <= dim; ++d)
    for (int j = 1; j <= dim; ++j)
      for (int k = 1; k <= dim; ++k)
        for (int l = 1; l <= dim; ++l) {
          BasePoly acc = conn.christoffel(d, l, j).derivative(k);
          acc += -conn.christoffel(d, k, j).derivative(l);
          for (int c = 1; c <= dim; ++c) {
            acc += conn.christoffel(c, l, j) * conn.christoffel(d, k, c);
            acc += -(conn.christoffel(c, k, j) * conn.christoffel(d, l, c));
          }
          out.at({d, j, k, l}) = acc;
        }
  return out;
}

TensorT<BasePoly> connection_curvature_lowered(const FedosovConnection& conn) {
  return connection_curvature(conn).lowered(conn.space(), 1);
}

TensorT<BasePoly> ricci_field(const SymplecticSpace& space, const TensorT<BasePoly>& r_lowered) {
  if (r_lowered.rank() != 4 || r_lowered.dim() != space.dim())
    throw std::invalid_argument("ricci_field: need a rank-4 field over the space");
  TensorT<BasePoly> mixed = r_lowered.raised(space, 1);
  const int d = space.dim();
  TensorT<BasePoly> out(d, 2);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      BasePoly acc;
      for (int c = 1; c <= d; ++c) acc += mixed.at({c, j, c, i});
      out.at({i, j}) = acc;
    }
  return out;
}

std::map<Exponents, Tensor, GradedLexLess> tensor_slabs(const TensorT<BasePoly>& t) {
  std::map<Exponents, Tensor, GradedLexLess> out;
  std::vector<int> idx = t.first_index();
  do {
    for (const auto& [e, c] : t.at(idx).terms()) {
      auto [it, inserted] = out.try_emplace(e, Tensor(t.dim(), t.rank()));
      it->second.at(idx) = c;
    }
  } while (TensorT<BasePoly>::advance(idx, t.dim()));
  return out;
}

Tensor eval_tensor(const TensorT<BasePoly>& t, const std::vector<Scalar>& point) {
  Tensor out(t.dim(), t.rank());
  std::vector<int> idx = t.first_index();
  do {
    out.at(idx) = t.at(idx).eval(point);
  } while (TensorT<BasePoly>::advance(idx, t.dim()));
  return out;
}

FieldForm::FieldForm(int l, int cap) : l_(l), cap_(cap) {
  if (l < 1) throw std::invalid_argument("FieldForm: l must be positive");
  if (cap < 0) throw std::invalid_argument("FieldForm: negative cap");
}

FieldForm FieldForm::constant(const SpinorForm& value) {
  FieldForm out(value.l(), value.cap());
  out.add_term(Exponents(2 * value.l(), 0), value);
  return out;
}

FieldForm FieldForm::monomial(const Exponents& base, const SpinorForm& value) {
  FieldForm out(value.l(), value.cap());
  out.add_term(base, value);
  return out;
}

void FieldForm::add_term(const Exponents& base, const SpinorForm& value) {
  if (value.l() != l_) throw std::invalid_argument("FieldForm: mixed fiber dimensions");
  if (static_cast<int>(base.size()) != 2 * l_)
    throw std::invalid_argument("FieldForm: base monomial must use the 2l coordinates");
  for (int x : base)
    if (x < 0) throw std::invalid_argument("FieldForm: negative exponent");
  if (value.is_zero()) return;
  if (value.cap() > cap_) cap_ = value.cap();
  auto [it, inserted] = terms_.try_emplace(base, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SpinorForm FieldForm::coefficient(const Exponents& base) const {
  auto it = terms_.find(base);
  return it == terms_.end() ? SpinorForm(l_, cap_) : it->second;
}

FieldForm& FieldForm::operator+=(const FieldForm& o) {
  if (l_ != o.l_) throw std::invalid_argument("FieldForm: mixed fiber dimensions");
  for (const auto& [base, value] : o.terms_) add_term(base, value);
  return *this;
}

FieldForm FieldForm::scaled(const Scalar& c) const {
  FieldForm out(l_, cap_);
  if (c.is_zero()) return out;
  for (const auto& [base, value] : terms_) out.terms_.emplace(base, value.scaled(c));
  return out;
}

FieldForm FieldForm::times(const BasePoly& f) const {
  FieldForm out(l_, cap_);
  for (const auto& [e, c] : f.terms()) {
    if (static_cast<int>(e.size()) != 2 * l_)
      throw std::invalid_argument("FieldForm: base polynomial arity mismatch");
    for (const auto& [base, value] : terms_) out.add_term(add_exps(base, e), value.scaled(c));
  }
  return out;
}

FieldForm FieldForm::with_cap(int new_cap) const {
  FieldForm out(l_, new_cap);
  for (const auto& [base, value] : terms_) out.add_term(base, value.with_cap(new_cap));
  return out;
}

SpinorForm FieldForm::eval(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != 2 * l_)
    throw std::invalid_argument("FieldForm: point arity mismatch");
  SpinorForm acc(l_, cap_);
  for (const auto& [base, value] : terms_) {
    Scalar factor(1);
    for (std::size_t k = 0; k < base.size(); ++k)
      for (int p = 0; p < base[k]; ++p) factor *= point[k];
    acc += value.scaled(factor);
  }
  return acc;
}

std::optional<int> FieldForm::form_degree() const {
  std::optional<int> d;
  for (const auto& [base, value] : terms_) {
    std::optional<int> vd = value.form_degree();
    if (!vd) return std::nullopt;
    if (!d)
      d = vd;
    else if (*d != *vd)
      return std::nullopt;
  }
  return d;
}

int FieldForm::base_degree() const {
  int d = -1;
  for (const auto& [base, value] : terms_)
    if (total_degree(base) > d) d = total_degree(base);
  return d;
}

std::string FieldForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [base, value] : terms_) {
    if (!first) os << " + ";
    os << monomial_str(base) << " * (" << value.str() << ")";
    first = false;
  }
  return os.str();
}

SpinorForm wedge_basis(int a, const SpinorForm& phi) {
  if (a < 1 || a > phi.dim()) throw std::out_of_range("wedge_basis: index out of range");
  SpinorForm out(phi.l(), phi.cap());
  for (const auto& [key, c] : phi.terms()) {
    auto wedged = wedge_insert(key.form, a);
    if (!wedged) continue;
    out.add_term(wedged->first, key.exps, c * Scalar(wedged->second));
  }
  return out;
}

SpinorForm meta_on_form(const SymplecticSpace& space, const SpElement& A, const SpinorForm& phi) {
  SpinorForm out(phi.l(), phi.cap() + 2);
  std::set<FormIndex> forms;
  for (const auto& [key, c] : phi.terms()) forms.insert(key.form);
  for (const FormIndex& f : forms)
    out += SpinorForm::from_poly(f, meta_action(space, A, phi.poly_at(f)));
  return out;
}

FieldForm covariant_exterior_derivative(const FedosovConnection& conn, const FieldForm& psi) {
  if (psi.l() != conn.l()) throw std::invalid_argument("covariant derivative: dimension mismatch");
  const SymplecticSpace& space = conn.space();
  FieldForm out(psi.l(), psi.cap() + 2);
  for (const auto& [base, value] : psi.terms()) {
    for (int a = 1; a <= conn.dim(); ++a) {
      if (base[a - 1] > 0) {
        Exponents shifted = base;
        --shifted[a - 1];
        out.add_term(shifted, wedge_basis(a, value).scaled(Scalar(base[a - 1])));
      }
      for (const auto& [e, A] : conn.sp_series(a))
        out.add_term(add_exps(base, e), wedge_basis(a, meta_on_form(space, A, value)));
    }
  }
  return out;
}

FieldForm curvature_operator_field(const FedosovConnection& conn, const FieldForm& psi) {
  const SymplecticSpace& space = conn.space();
  auto slabs = tensor_slabs(connection_curvature_lowered(conn));
  FieldForm out(psi.l(), psi.cap() + 2);
  const Scalar half = Scalar::rational(1, 2);
  for (const auto& [beta, slab] : slabs)
    for (const auto& [gamma, value] : psi.terms())
      out.add_term(add_exps(beta, gamma), apply_curvature_tensor(space, slab, value).scaled(half));
  return out;
}

FieldForm project_field(DecompositionEngine& engine, const FieldForm& psi, int i, int j) {
  FieldForm out(psi.l(), psi.cap());
  for (const auto& [base, value] : psi.terms()) out.add_term(base, engine.project(value, i, j));
  return out;
}

FieldForm twistor_step(DecompositionEngine& engine, const FedosovConnection& conn, int i,
                       const FieldForm& psi) {
  FieldForm d = covariant_exterior_derivative(conn, psi);
  return project_field(engine, d, i + 1, xi_top(conn.l(), i + 1));
}

FieldForm dirac_operator(const FedosovConnection& conn, const FieldForm& phi) {
  if (!phi.is_zero() && phi.form_degree() != std::optional<int>(0))
    throw std::invalid_argument("dirac_operator: need a 0-form spinor field");
  FieldForm d = covariant_exterior_derivative(conn, phi);
  FieldForm out(phi.l(), d.cap() + 1);
  for (const auto& [base, value] : d.terms()) out.add_term(base, apply_y(conn.space(), value));
  return out;
}

}  // namespace symtwist
