#include "symtwist/curvature.hpp"

#include <stdexcept>

namespace symtwist {

namespace {

void check_rank4(const Tensor& r) {
  if (r.rank() != 4) throw std::invalid_argument("curvature tensor must have rank 4");
}

}  // namespace

bool curvature_symmetric_12(const SymplecticSpace& space, const Tensor& r) {
  check_rank4(r);
  int d = space.dim();
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l)
          if (!(r.at({i, j, k, l}) == r.at({j, i, k, l}))) return false;
  return true;
}

bool curvature_antisymmetric_34(const SymplecticSpace& space, const Tensor& r) {
  check_rank4(r);
  int d = space.dim();
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int l = k; l <= d; ++l)
          if (!(r.at({i, j, k, l}) == -r.at({i, j, l, k}))) return false;
  return true;
}

bool curvature_first_bianchi(const SymplecticSpace& space, const Tensor& r) {
  check_rank4(r);
  int d = space.dim();
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
          Scalar acc = r.at({i, j, k, l}) + r.at({i, k, l, j}) + r.at({i, l, j, k});
          if (!acc.is_zero()) return false;
        }
  return true;
}

bool curvature_symmetries(const SymplecticSpace& space, const Tensor& r) {
  return curvature_symmetric_12(space, r) && curvature_antisymmetric_34(space, r) &&
         curvature_first_bianchi(space, r);
}

Tensor ricci_from_curvature(const SymplecticSpace& space, const Tensor& r) {
  check_rank4(r);
  Tensor mixed = r.raised(space, 1);
  int d = space.dim();
  Tensor sigma(d, 2);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      Scalar acc;
      for (int c = 1; c <= d; ++c) acc += mixed.at({c, j, c, i});
      sigma.at({i, j}) = acc;
    }
  return sigma;
}

Tensor extended_ricci(const SymplecticSpace& space, const Tensor& sigma) {
  if (sigma.rank() != 2 || !symmetric_in(sigma, 1, 2))
    throw std::invalid_argument("extended_ricci: input must be symmetric rank 2");
  int d = space.dim();
  Scalar norm = Scalar(1) / Scalar(2 * (space.l() + 1));
  Tensor out(d, 4);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
          Scalar acc = space.omega(i, l) * sigma.at({j, k}) - space.omega(i, k) * sigma.at({j, l}) +
                       space.omega(j, l) * sigma.at({i, k}) - space.omega(j, k) * sigma.at({i, l}) +
                       Scalar(2) * sigma.at({i, j}) * space.omega(k, l);
          out.at({i, j, k, l}) = acc * norm;
        }
  return out;
}

Tensor weyl_part(const SymplecticSpace& space, const Tensor& r) {
  return r - extended_ricci(space, ricci_from_curvature(space, r));
}

SpinorForm apply_curvature_tensor(const SymplecticSpace& space, const Tensor& r,
                                  const SpinorForm& phi) {
  check_rank4(r);
  Tensor up = r.raised(space, 1).raised(space, 2);  // R^{ij}_{kl}
  int d = space.dim();
  SpinorForm out(phi.l(), phi.cap() + 2);
  Scalar half_i = Scalar::i() / Scalar(2);
  for (const auto& [key, c] : phi.terms()) {
    for (int k = 1; k <= d; ++k)
      for (int l = 1; l <= d; ++l) {
        if (k == l) continue;
        auto inner = wedge_insert(key.form, l);
        if (!inner) continue;
        auto outer = wedge_insert(inner->first, k);
        if (!outer) continue;
        Scalar wedge_sign(inner->second * outer->second);
        for (int i = 1; i <= d; ++i)
          for (int j = 1; j <= d; ++j) {
            const Scalar& coeff = up.at({i, j, k, l});
            if (coeff.is_zero()) continue;
            PolySpinor mono = PolySpinor::monomial(phi.l(), phi.cap(), key.exps, c);
            PolySpinor img = clifford_mul(i, clifford_mul(j, mono));
            if (img.is_zero()) continue;
            for (const auto& [e, v] : img.terms())
              out.add_term(outer->first, e, v * coeff * wedge_sign * half_i);
          }
      }
  }
  return out;
}

SpinorForm ricci_twistor_action(const SymplecticSpace& space, const Tensor& sigma,
                                const SpinorForm& phi) {
  SpinorForm a = apply_x_squared(space, apply_theta(space, sigma, phi)).scaled(Scalar::i());
  SpinorForm b = apply_x(space, apply_sigma(space, sigma, phi));
  return (a + b).scaled(Scalar::i() / Scalar(space.l() + 1));
}

}  // namespace symtwist
