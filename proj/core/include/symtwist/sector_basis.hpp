#pragma once

#include <map>
#include <vector>

#include "symtwist/linalg.hpp"
#include "symtwist/sparse.hpp"
#include "symtwist/spinor_form.hpp"
#include "symtwist/symplectic.hpp"

namespace symtwist {

// strictly increasing tuples of the given size over 1..dim, lex order
std::vector<FormIndex> all_forms(int dim, int degree);
// exponent vectors of exact total degree d over l variables, lex order
std::vector<Exponents> monomials_of_degree(int l, int d);

// Ordered basis of the (form degree, oscillator weight) sector inside the
// degree-capped space.  Construction requires the sector to be complete at
// the cap so that every rank / kernel / span statement over it is exact.
class SectorBasis {
 public:
  SectorBasis(const SymplecticSpace& space, int form_degree, int weight, int cap);

  int l() const { return l_; }
  int form_degree() const { return form_degree_; }
  int weight() const { return weight_; }
  int cap() const { return cap_; }
  int size() const { return static_cast<int>(keys_.size()); }
  const FormKey& key(int idx) const { return keys_.at(idx); }

  // throws when the element has a term outside this sector
  SparseVector to_vector(const SpinorForm& phi) const;
  SpinorForm to_form(const SparseVector& v) const;
  SpinorForm unit(int idx) const;

 private:
  int l_, form_degree_, weight_, cap_;
  std::vector<FormKey> keys_;
  std::map<FormKey, int, FormKeyLess> index_;
};

// column j is the operator applied to the j-th domain basis element,
// expressed over the codomain basis
template <class Op>
SparseMatrix operator_matrix(const SectorBasis& dom, const SectorBasis& cod, Op&& op) {
  SparseMatrix m(cod.size(), dom.size());
  for (int j = 0; j < dom.size(); ++j) {
    SparseVector col = cod.to_vector(op(dom.unit(j)));
    for (const auto& [row, c] : col) m.set(row, j, c);
  }
  return m;
}

}  // namespace symtwist
