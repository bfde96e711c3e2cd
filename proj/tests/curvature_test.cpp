#include "symtwist/curvature.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "symtwist/decomposition.hpp"
#include "symtwist/rng.hpp"
#include "symtwist/sp_element.hpp"

using namespace symtwist;

namespace {

SpinorForm random_form(const SymplecticSpace& V, int cap, Rng& rng, int terms = 4) {
  SpinorForm out(V.l(), cap);
  for (int t = 0; t < terms; ++t) {
    FormIndex f;
    for (int k = 1; k <= V.dim(); ++k)
      if (rng.next_int(0, 2) == 0) f.push_back(k);
    Exponents e(V.l(), 0);
    int budget = rng.next_int(0, cap);
    for (int k = 0; k < V.l() && budget > 0; ++k) {
      e[k] = rng.next_int(0, budget);
      budget -= e[k];
    }
    out.add_term(f, e, rng.small_nonzero());
  }
  return out;
}

// curvature of a constant-coefficient torsion-free symplectic connection:
// R(e_a, e_b) = [G_a, G_b] for sp-valued coefficients G_a with totally
// symmetric lowered form
Tensor commutator_curvature(const SymplecticSpace& V, Rng& rng) {
  int d = V.dim();
  // totally symmetric lowered coefficients
  Tensor low(d, 3);
  for (int a = 1; a <= d; ++a)
    for (int b = a; b <= d; ++b)
      for (int c = b; c <= d; ++c) {
        Scalar v = rng.small_scalar();
        std::vector<int> idx{a, b, c};
        std::sort(idx.begin(), idx.end());
        do {
          low.at(idx) = v;
        } while (std::next_permutation(idx.begin(), idx.end()));
      }
  std::vector<SpElement> gamma;
  for (int a = 1; a <= d; ++a) {
    Tensor slab(d, 2);
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c) slab.at({b, c}) = low.at({a, b, c});
    gamma.push_back(SpElement::from_lowered(V, slab));
  }
  Tensor r(d, 4);
  for (int k = 1; k <= d; ++k)
    for (int l = 1; l <= d; ++l) {
      Tensor commLowered = gamma[k - 1].commutator(V, gamma[l - 1]).lowered(V);
      for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) r.at({i, j, k, l}) = commLowered.at({i, j});
    }
  return r;
}

SpinorForm random_block_element(const SectorDecomposition& dec, int j, Rng& rng) {
  SparseVector acc;
  for (const SparseVector& col : dec.block_columns(j)) acc.axpy(rng.small_nonzero(), col);
  return dec.basis().to_form(acc);
}

}  // namespace

TEST_CASE("extension of the trace tensor has curvature symmetries") {
  Rng rng(21);
  for (int l : {2, 3}) {
    SymplecticSpace V(l);
    Tensor sigma = random_symmetric(V, rng);
    Tensor ext = extended_ricci(V, sigma);
    CHECK(curvature_symmetric_12(V, ext));
    CHECK(curvature_antisymmetric_34(V, ext));
    CHECK(curvature_first_bianchi(V, ext));
  }
}

TEST_CASE("trace recovery from the extension is exact with multiplier one") {
  Rng rng(22);
  for (int l : {2, 3}) {
    SymplecticSpace V(l);
    Tensor sigma = random_symmetric(V, rng);
    CHECK(ricci_from_curvature(V, extended_ricci(V, sigma)) == sigma);
    CHECK(weyl_part(V, extended_ricci(V, sigma)).is_zero());
  }
}

TEST_CASE("commutator curvature satisfies the symmetries and splits exactly") {
  Rng rng(23);
  for (int l : {2, 3}) {
    SymplecticSpace V(l);
    Tensor r = commutator_curvature(V, rng);
    CHECK(curvature_symmetries(V, r));
    Tensor sigma = ricci_from_curvature(V, r);
    CHECK(symmetric_in(sigma, 1, 2));  // trace symmetry of a genuine curvature
    Tensor w = weyl_part(V, r);
    CHECK(ricci_from_curvature(V, w).is_zero());
    CHECK(extended_ricci(V, sigma) + w == r);
    CHECK(curvature_symmetries(V, w));
  }
}

TEST_CASE("trace-type curvature action equals the twistor generator form") {
  Rng rng(24);
  for (int l : {2, 3}) {
    SymplecticSpace V(l);
    for (int trial = 0; trial < 3; ++trial) {
      Tensor sigma = random_symmetric(V, rng);
      SpinorForm phi = random_form(V, 4, rng);
      CHECK(apply_curvature_tensor(V, extended_ricci(V, sigma), phi) ==
            ricci_twistor_action(V, sigma, phi));
    }
  }
}

TEST_CASE("curvature action is additive in the tensor") {
  Rng rng(25);
  SymplecticSpace V(2);
  Tensor r = commutator_curvature(V, rng);
  Tensor sigma = ricci_from_curvature(V, r);
  Tensor w = weyl_part(V, r);
  SpinorForm phi = random_form(V, 3, rng);
  CHECK(apply_curvature_tensor(V, r, phi) ==
        apply_curvature_tensor(V, extended_ricci(V, sigma), phi) +
            apply_curvature_tensor(V, w, phi));
}

TEST_CASE("trace-type curvature action shifts weight by -2, 0, +2 and raises degree by 2") {
  Rng rng(26);
  SymplecticSpace V(2);
  Tensor sigma = random_symmetric(V, rng);
  SectorBasis basis(V, 1, 1, 3);
  for (int k = 0; k < basis.size(); ++k) {
    SpinorForm img = ricci_twistor_action(V, sigma, basis.unit(k));
    for (const auto& [sector, part] : img.sector_split()) {
      CHECK(sector.first == 3);
      CHECK(sector.second >= -1);
      CHECK(sector.second <= 3);
      CHECK((sector.second - 1) % 2 == 0);
    }
  }
}

TEST_CASE("trace-type curvature respects the block containments two levels up") {
  Rng rng(27);
  for (int l : {2, 3}) {
    SymplecticSpace V(l);
    DecompositionEngine engine(V);
    Tensor sigma = random_symmetric(V, rng);
    // psi in block j=0 at form degree 0: image blocks above j+1 vanish
    SpinorForm psi = random_block_element(engine.sector(0, 0), 0, rng);
    SpinorForm img = apply_curvature_tensor(V, extended_ricci(V, sigma), psi);
    for (int j = 2; j <= xi_top(l, 2); ++j) CHECK(engine.project(img, 2, j).is_zero());
    CHECK(!img.is_zero());
  }
}

TEST_CASE("top-block images two levels up vanish away from the middle") {
  Rng rng(28);
  for (int l : {2, 3}) {
    SymplecticSpace V(l);
    DecompositionEngine engine(V);
    Tensor sigma = random_symmetric(V, rng);
    for (int i = 0; i <= 2 * l - 2; ++i) {
      if (i == l - 1) continue;  // the single degree where the complex breaks
      int q = 1;
      SpinorForm psi = random_block_element(engine.sector(i, q), xi_top(l, i), rng);
      if (psi.is_zero()) continue;
      SpinorForm img = apply_curvature_tensor(V, extended_ricci(V, sigma), psi);
      CHECK(engine.project(img, i + 2, xi_top(l, i + 2)).is_zero());
    }
  }
}

TEST_CASE("the middle degree genuinely breaks: a nonzero top-block image exists") {
  Rng rng(29);
  for (int l : {2, 3}) {
    SymplecticSpace V(l);
    DecompositionEngine engine(V);
    Tensor sigma = random_symmetric(V, rng);
    int i = l - 1, q = 1;
    SpinorForm psi = random_block_element(engine.sector(i, q), xi_top(l, i), rng);
    SpinorForm img = apply_curvature_tensor(V, extended_ricci(V, sigma), psi);
    CHECK(!engine.project(img, i + 2, xi_top(l, i + 2)).is_zero());
  }
}
