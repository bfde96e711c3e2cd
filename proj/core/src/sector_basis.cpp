#include "symtwist/sector_basis.hpp"

#include <stdexcept>

#include "symtwist/operators.hpp"

namespace symtwist {

std::vector<FormIndex> all_forms(int dim, int degree) {
  std::vector<FormIndex> out;
  if (degree < 0 || degree > dim) return out;
  FormIndex cur(degree);
  auto rec = [&](auto&& self, int pos, int next) -> void {
    if (pos == degree) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= dim - (degree - pos - 1); ++v) {
      cur[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

std::vector<Exponents> monomials_of_degree(int l, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  Exponents cur(l, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == l - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (l == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

SectorBasis::SectorBasis(const SymplecticSpace& space, int form_degree, int weight, int cap)
    : l_(space.l()), form_degree_(form_degree), weight_(weight), cap_(cap) {
  if (!sector_complete(space, form_degree, weight, cap))
    throw std::logic_error("SectorBasis: sector truncated by the degree cap");
  for (const FormIndex& f : all_forms(space.dim(), form_degree)) {
    int low = 0;
    for (int idx : f)
      if (idx <= l_) ++low;
    int d = weight + 2 * low - form_degree;
    if (d < 0) continue;
    for (const Exponents& e : monomials_of_degree(l_, d)) {
      index_.emplace(FormKey{f, e}, static_cast<int>(keys_.size()));
      keys_.push_back(FormKey{f, e});
    }
  }
}

SparseVector SectorBasis::to_vector(const SpinorForm& phi) const {
  VectorBuilder b;
  for (const auto& [key, c] : phi.terms()) {
    auto it = index_.find(key);
    if (it == index_.end())
      throw std::logic_error("SectorBasis: element leaves the sector");
    b.add(it->second, c);
  }
  return b.take();
}

SpinorForm SectorBasis::to_form(const SparseVector& v) const {
  SpinorForm out(l_, cap_);
  for (const auto& [idx, c] : v) {
    const FormKey& key = keys_.at(idx);
    out.add_term(key.form, key.exps, c);
  }
  return out;
}

SpinorForm SectorBasis::unit(int idx) const {
  const FormKey& key = keys_.at(idx);
  return SpinorForm::term(l_, cap_, key.form, key.exps);
}

}  // namespace symtwist
