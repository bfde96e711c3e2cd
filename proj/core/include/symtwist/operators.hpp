#pragma once

#include "symtwist/sp_element.hpp"
#include "symtwist/spinor_form.hpp"
#include "symtwist/symplectic.hpp"
#include "symtwist/tensor.hpp"

namespace symtwist {

// X = sum_k eps^k wedge (.) tensor e_k.(.)   raises form degree, keeps weight
SpinorForm apply_x(const SymplecticSpace& space, const SpinorForm& phi);

// Y = sum_{i,j} omega^{ij} iota_{e_i}(.) tensor e_j.(.)   lowers form degree,
// keeps weight
SpinorForm apply_y(const SymplecticSpace& space, const SpinorForm& phi);

// closed form of X composed with itself: -(i/2) omega_{ij} eps^i wedge eps^j
SpinorForm apply_x_squared(const SymplecticSpace& space, const SpinorForm& phi);

// closed form of Y composed with itself: -(i/2) omega^{ij} iota_{e_i} iota_{e_j}
// (sign pinned by the exact composition check in the operator tests)
SpinorForm apply_y_squared(const SymplecticSpace& space, const SpinorForm& phi);

// Sigma^sigma = sigma^i_j eps^j wedge (.) tensor e_i.(.)  for symmetric
// lowered sigma; shifts weight by -2, 0, +2
SpinorForm apply_sigma(const SymplecticSpace& space, const Tensor& sigma_lowered,
                       const SpinorForm& phi);

// Theta^sigma = id tensor sigma^{ij} e_i.e_j.(.)
SpinorForm apply_theta(const SymplecticSpace& space, const Tensor& sigma_lowered,
                       const SpinorForm& phi);

// infinitesimal action of A in sp(2l): dual derivation on the form factor
// plus the metaplectic action on the spinor factor; commutes with X and Y
SpinorForm apply_rho(const SymplecticSpace& space, const SpElement& A, const SpinorForm& phi);

// every (form degree, weight) pair reachable inside the degree cap is present
bool sector_complete(const SymplecticSpace& space, int form_degree, int weight, int cap);

}  // namespace symtwist
