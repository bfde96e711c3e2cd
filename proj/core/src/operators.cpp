#include "symtwist/operators.hpp"

#include <stdexcept>

#include "symtwist/poly_spinor.hpp"

namespace symtwist {

namespace {

// e_k.(x^alpha): k <= l multiplies by i*x^k, k > l differentiates by x^{k-l}
void clifford_on_exps(int l, int k, const Exponents& e, Exponents& out, Scalar& factor) {
  out = e;
  if (k <= l) {
    ++out[k - 1];
    factor = Scalar::i();
  } else {
    int a = e[k - l - 1];
    if (a == 0) {
      factor = Scalar();
      return;
    }
    --out[k - l - 1];
    factor = Scalar(a);
  }
}

}  // namespace

SpinorForm apply_x(const SymplecticSpace& space, const SpinorForm& phi) {
  SpinorForm out(phi.l(), phi.cap() + 1);
  Exponents img;
  Scalar factor;
  for (const auto& [key, c] : phi.terms()) {
    for (int k = 1; k <= space.dim(); ++k) {
      auto wedge = wedge_insert(key.form, k);
      if (!wedge) continue;
      clifford_on_exps(phi.l(), k, key.exps, img, factor);
      if (factor.is_zero()) continue;
      out.add_term(wedge->first, img, c * factor * Scalar(wedge->second));
    }
  }
  return out;
}

SpinorForm apply_y(const SymplecticSpace& space, const SpinorForm& phi) {
  SpinorForm out(phi.l(), phi.cap() + 1);
  Exponents img;
  Scalar factor;
  for (const auto& [key, c] : phi.terms()) {
    for (int i : key.form) {
      auto con = contract_index(key.form, i);
      for (int j = 1; j <= space.dim(); ++j) {
        int up = space.omega_up_sign(i, j);
        if (up == 0) continue;
        clifford_on_exps(phi.l(), j, key.exps, img, factor);
        if (factor.is_zero()) continue;
        out.add_term(con->first, img, c * factor * Scalar(up * con->second));
      }
    }
  }
  return out;
}

SpinorForm apply_x_squared(const SymplecticSpace& space, const SpinorForm& phi) {
  SpinorForm out(phi.l(), phi.cap());
  Scalar half_i = Scalar::i() / Scalar(-2);
  for (const auto& [key, c] : phi.terms()) {
    for (int i = 1; i <= space.dim(); ++i)
      for (int j = 1; j <= space.dim(); ++j) {
        int w = space.omega_sign(i, j);
        if (w == 0) continue;
        auto first = wedge_insert(key.form, j);
        if (!first) continue;
        auto second = wedge_insert(first->first, i);
        if (!second) continue;
        out.add_term(second->first, key.exps,
                     c * half_i * Scalar(w * first->second * second->second));
      }
  }
  return out;
}

SpinorForm apply_y_squared(const SymplecticSpace& space, const SpinorForm& phi) {
  SpinorForm out(phi.l(), phi.cap());
  Scalar half_i = Scalar::i() / Scalar(-2);
  for (const auto& [key, c] : phi.terms()) {
    for (int i = 1; i <= space.dim(); ++i)
      for (int j = 1; j <= space.dim(); ++j) {
        int w = space.omega_up_sign(i, j);
        if (w == 0) continue;
        auto first = contract_index(key.form, j);
        if (!first) continue;
        auto second = contract_index(first->first, i);
        if (!second) continue;
        out.add_term(second->first, key.exps,
                     c * half_i * Scalar(w * first->second * second->second));
      }
  }
  return out;
}

SpinorForm apply_sigma(const SymplecticSpace& space, const Tensor& sigma_lowered,
                       const SpinorForm& phi) {
  if (sigma_lowered.rank() != 2 || !symmetric_in(sigma_lowered, 1, 2))
    throw std::invalid_argument("apply_sigma: coefficient tensor must be symmetric rank 2");
  Tensor mixed = sigma_lowered.raised(space, 1);  // sigma^i_j
  SpinorForm out(phi.l(), phi.cap() + 1);
  Exponents img;
  Scalar factor;
  for (const auto& [key, c] : phi.terms()) {
    for (int i = 1; i <= space.dim(); ++i)
      for (int j = 1; j <= space.dim(); ++j) {
        const Scalar& coeff = mixed.at({i, j});
        if (coeff.is_zero()) continue;
        auto wedge = wedge_insert(key.form, j);
        if (!wedge) continue;
        clifford_on_exps(phi.l(), i, key.exps, img, factor);
        if (factor.is_zero()) continue;
        out.add_term(wedge->first, img, c * coeff * factor * Scalar(wedge->second));
      }
  }
  return out;
}

SpinorForm apply_theta(const SymplecticSpace& space, const Tensor& sigma_lowered,
                       const SpinorForm& phi) {
  if (sigma_lowered.rank() != 2 || !symmetric_in(sigma_lowered, 1, 2))
    throw std::invalid_argument("apply_theta: coefficient tensor must be symmetric rank 2");
  Tensor up = sigma_lowered.raised(space, 1).raised(space, 2);  // sigma^{ij}
  SpinorForm out(phi.l(), phi.cap() + 2);
  Exponents inner, outer;
  Scalar f_inner, f_outer;
  for (const auto& [key, c] : phi.terms()) {
    for (int i = 1; i <= space.dim(); ++i)
      for (int j = 1; j <= space.dim(); ++j) {
        const Scalar& coeff = up.at({i, j});
        if (coeff.is_zero()) continue;
        clifford_on_exps(phi.l(), j, key.exps, inner, f_inner);
        if (f_inner.is_zero()) continue;
        clifford_on_exps(phi.l(), i, inner, outer, f_outer);
        if (f_outer.is_zero()) continue;
        out.add_term(key.form, outer, c * coeff * f_inner * f_outer);
      }
  }
  return out;
}

SpinorForm apply_rho(const SymplecticSpace& space, const SpElement& A, const SpinorForm& phi) {
  SpinorForm out(phi.l(), phi.cap() + 2);
  // dual derivation on the form factor: eps^k -> -sum_b A^k_b eps^b
  for (const auto& [key, c] : phi.terms()) {
    for (size_t m = 0; m < key.form.size(); ++m) {
      auto removed = contract_index(key.form, key.form[m]);
      for (int b = 1; b <= space.dim(); ++b) {
        const Scalar& a_kb = A.entry(key.form[m], b);
        if (a_kb.is_zero()) continue;
        auto wedge = wedge_insert(removed->first, b);
        if (!wedge) continue;
        out.add_term(wedge->first, key.exps,
                     c * a_kb * Scalar(-removed->second * wedge->second));
      }
    }
  }
  // metaplectic action on the spinor factor, grouped per form index
  std::map<FormIndex, PolySpinor> groups;
  for (const auto& [key, c] : phi.terms()) {
    auto it = groups.find(key.form);
    if (it == groups.end()) it = groups.emplace(key.form, PolySpinor(phi.l(), phi.cap())).first;
    it->second.add_term(key.exps, c);
  }
  for (const auto& [form, poly] : groups) out += SpinorForm::from_poly(form, meta_action(space, A, poly));
  return out;
}

bool sector_complete(const SymplecticSpace& space, int form_degree, int weight, int cap) {
  int l = space.l();
  if (form_degree < 0 || form_degree > 2 * l) return true;  // empty sector
  int max_low = std::min(form_degree, l);
  // largest polynomial degree needed across form indices in the sector
  return weight - form_degree + 2 * max_low <= cap;
}

}  // namespace symtwist
