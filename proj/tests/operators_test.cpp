#include "symtwist/operators.hpp"

#include <stdexcept>

#include "doctest.h"
#include "symtwist/rng.hpp"
#include "symtwist/sector_basis.hpp"

using namespace symtwist;

namespace {

SpinorForm random_form(const SymplecticSpace& V, int cap, Rng& rng, int terms = 5) {
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

}  // namespace

TEST_CASE("wedge and contraction index algebra") {
  FormIndex f{1, 3, 4};
  CHECK(!wedge_insert(f, 3).has_value());
  auto w = wedge_insert(f, 2);
  REQUIRE(w.has_value());
  CHECK(w->first == FormIndex{1, 2, 3, 4});
  CHECK(w->second == -1);  // one transposition past eps^1

  auto c = contract_index(f, 4);
  REQUIRE(c.has_value());
  CHECK(c->first == FormIndex{1, 3});
  CHECK(c->second == 1);  // two transpositions
  CHECK(!contract_index(f, 2).has_value());

  // Cartan-type identity at the index level: i(e_k) eps^k wedge + eps^k wedge i(e_k) = id
  for (int k = 1; k <= 4; ++k) {
    int acc = 0;
    if (auto in = wedge_insert(f, k)) {
      auto back = contract_index(in->first, k);
      acc += in->second * back->second;
    }
    if (auto out = contract_index(f, k)) {
      auto back = wedge_insert(out->first, k);
      acc += out->second * back->second;
    }
    CHECK(acc == 1);
  }
}

TEST_CASE("X on simple elements at l=2") {
  SymplecticSpace V(2);
  SpinorForm one = SpinorForm::term(2, 3, {}, {0, 0});
  SpinorForm img = apply_x(V, one);
  CHECK(img.coeff({1}, {1, 0}) == Scalar::i());
  CHECK(img.coeff({2}, {0, 1}) == Scalar::i());
  CHECK(img.terms().size() == 2);  // e_3., e_4. kill constants
  CHECK(img.form_degree() == 1);
  CHECK(img.weight() == 0);

  SpinorForm x1 = SpinorForm::term(2, 3, {1}, {1, 0});
  SpinorForm img2 = apply_x(V, x1);
  CHECK(img2.coeff({1, 3}, {0, 0}) == Scalar(-1));  // eps^3 wedge eps^1 = -eps^1 wedge eps^3
  CHECK(img2.coeff({1, 2}, {1, 1}) == -Scalar::i());
}

TEST_CASE("Y on simple elements at l=2") {
  SymplecticSpace V(2);
  CHECK(apply_y(V, SpinorForm::term(2, 3, {1}, {0, 0})).is_zero());
  CHECK(apply_y(V, SpinorForm::term(2, 3, {1}, {1, 0})) == SpinorForm::term(2, 4, {}, {0, 0}));
  SpinorForm img = apply_y(V, SpinorForm::term(2, 3, {3}, {0, 0}));
  CHECK(img.coeff({}, {1, 0}) == -Scalar::i());
  CHECK(img.terms().size() == 1);
}

TEST_CASE("X and Y preserve weight and flip polynomial parity") {
  for (int l : {2, 3}) {
    SymplecticSpace V(l);
    for (int q : {-1, 0, 2}) {
      SectorBasis basis(V, 1, q, 8);
      for (int k = 0; k < basis.size(); k += 3) {
        SpinorForm u = basis.unit(k);
        SpinorForm xu = apply_x(V, u), yu = apply_y(V, u);
        if (!xu.is_zero()) {
          CHECK(xu.form_degree() == 2);
          CHECK(xu.weight() == q);
          CHECK(xu.parity() == 1 - *u.parity());
        }
        if (!yu.is_zero()) {
          CHECK(yu.form_degree() == 0);
          CHECK(yu.weight() == q);
        }
      }
    }
  }
}

TEST_CASE("closed forms of the squared operators") {
  Rng rng(161803);
  for (int l : {2, 3}) {
    SymplecticSpace V(l);
    for (int trial = 0; trial < 4; ++trial) {
      SpinorForm phi = random_form(V, 5, rng);
      CHECK(apply_x(V, apply_x(V, phi)) == apply_x_squared(V, phi));
      CHECK(apply_y(V, apply_y(V, phi)) == apply_y_squared(V, phi));
    }
  }
}

TEST_CASE("coefficient operators require symmetric input") {
  SymplecticSpace V(2);
  Tensor anti(V.dim(), 2);
  anti.at({1, 2}) = Scalar(1);
  anti.at({2, 1}) = Scalar(-1);
  SpinorForm phi = SpinorForm::term(2, 3, {1}, {0, 0});
  CHECK_THROWS_AS(apply_sigma(V, anti, phi), std::invalid_argument);
  CHECK_THROWS_AS(apply_theta(V, anti, phi), std::invalid_argument);
}

TEST_CASE("sigma and theta shift weight by -2, 0, +2 and set parities") {
  Rng rng(777);
  SymplecticSpace V(2);
  Tensor sigma = random_symmetric(V, rng);
  SectorBasis basis(V, 1, 1, 8);
  for (int k = 0; k < basis.size(); k += 2) {
    SpinorForm u = basis.unit(k);
    for (const auto& [sector, part] : apply_sigma(V, sigma, u).sector_split()) {
      CHECK(sector.first == 2);
      CHECK((sector.second - 1) % 2 == 0);
      CHECK(sector.second >= -1);
      CHECK(sector.second <= 3);
      CHECK(part.parity() == 1 - *u.parity());
    }
    for (const auto& [sector, part] : apply_theta(V, sigma, u).sector_split()) {
      CHECK(sector.first == 1);
      CHECK((sector.second - 1) % 2 == 0);
      CHECK(sector.second >= -1);
      CHECK(sector.second <= 3);
      CHECK(part.parity() == u.parity());
    }
  }
}

TEST_CASE("operator identities with symmetric coefficient tensors") {
  Rng rng(31415);
  for (int l : {2, 3}) {
    SymplecticSpace V(l);
    for (int trial = 0; trial < 3; ++trial) {
      Tensor sigma = random_symmetric(V, rng);
      SpinorForm phi = random_form(V, 4, rng);

      // anticommutator of Sigma with X vanishes
      SpinorForm ax = apply_sigma(V, sigma, apply_x(V, phi)) +
                      apply_x(V, apply_sigma(V, sigma, phi));
      CHECK(ax.is_zero());

      // [X, Theta] = 2i Sigma
      SpinorForm bx = apply_x(V, apply_theta(V, sigma, phi)) -
                      apply_theta(V, sigma, apply_x(V, phi));
      CHECK(bx == apply_sigma(V, sigma, phi).scaled(Scalar(2) * Scalar::i()));

      // [Theta, Y^2] = 0
      SpinorForm y2 = apply_y(V, apply_y(V, phi));
      SpinorForm cx = apply_theta(V, sigma, y2) -
                      apply_y(V, apply_y(V, apply_theta(V, sigma, phi)));
      CHECK(cx.is_zero());

      // [{Sigma, Y}, Y^2] = 0
      auto anti_sy = [&](const SpinorForm& p) {
        return apply_sigma(V, sigma, apply_y(V, p)) + apply_y(V, apply_sigma(V, sigma, p));
      };
      SpinorForm dx = anti_sy(apply_y_squared(V, phi)) - apply_y_squared(V, anti_sy(phi));
      CHECK(dx.is_zero());
    }
  }
}

TEST_CASE("the sp action commutes with X and Y") {
  Rng rng(55);
  for (int l : {2, 3}) {
    SymplecticSpace V(l);
    for (int trial = 0; trial < 3; ++trial) {
      SpElement A = random_sp(V, rng);
      SpinorForm phi = random_form(V, 4, rng);
      CHECK(apply_rho(V, A, apply_x(V, phi)) == apply_x(V, apply_rho(V, A, phi)));
      CHECK(apply_rho(V, A, apply_y(V, phi)) == apply_y(V, apply_rho(V, A, phi)));
    }
  }
}

TEST_CASE("the sp action is a Lie algebra homomorphism on forms") {
  Rng rng(66);
  SymplecticSpace V(2);
  SpElement A = random_sp(V, rng), B = random_sp(V, rng);
  SpinorForm phi = random_form(V, 4, rng);
  SpinorForm lhs = apply_rho(V, A, apply_rho(V, B, phi)) -
                   apply_rho(V, B, apply_rho(V, A, phi));
  CHECK(lhs == apply_rho(V, A.commutator(V, B), phi));
}

TEST_CASE("sector bases enumerate complete sectors only") {
  SymplecticSpace V(2);
  CHECK(sector_complete(V, 1, 0, 4));
  CHECK(!sector_complete(V, 1, 4, 4));
  CHECK_THROWS_AS(SectorBasis(V, 1, 4, 4), std::logic_error);

  SectorBasis basis(V, 1, 0, 4);
  CHECK(basis.size() == 4);  // eps^1, eps^2 against the two degree-1 monomials
  CHECK(basis.key(0).form == FormIndex{1});

  Rng rng(9);
  VectorBuilder b;
  for (int k = 0; k < basis.size(); ++k) b.add(k, rng.small_scalar());
  SparseVector v = b.take();
  CHECK(basis.to_vector(basis.to_form(v)) == v);

  // elements outside the sector are rejected
  CHECK_THROWS_AS(basis.to_vector(SpinorForm::term(2, 4, {3}, {0, 0})), std::logic_error);
}

TEST_CASE("operator matrices agree with direct application") {
  SymplecticSpace V(2);
  SectorBasis dom(V, 1, 1, 6), cod(V, 2, 1, 6);
  SparseMatrix mx = operator_matrix(dom, cod, [&](const SpinorForm& p) { return apply_x(V, p); });
  Rng rng(123);
  VectorBuilder b;
  for (int k = 0; k < dom.size(); ++k) b.add(k, rng.small_scalar());
  SparseVector v = b.take();
  CHECK(mx.apply(v) == cod.to_vector(apply_x(V, dom.to_form(v))));
}
