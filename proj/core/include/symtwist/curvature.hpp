#pragma once

#include "symtwist/operators.hpp"
#include "symtwist/spinor_form.hpp"
#include "symtwist/symplectic.hpp"
#include "symtwist/tensor.hpp"

namespace symtwist {

// structural symmetries of a symplectic curvature tensor R_{ijkl}:
// symmetric in (i,j), antisymmetric in (k,l), first Bianchi in (j,k,l)
bool curvature_symmetric_12(const SymplecticSpace& space, const Tensor& r);
bool curvature_antisymmetric_34(const SymplecticSpace& space, const Tensor& r);
bool curvature_first_bianchi(const SymplecticSpace& space, const Tensor& r);
bool curvature_symmetries(const SymplecticSpace& space, const Tensor& r);

// trace of the curvature tensor: sigma_{ij} = sum_c R^c_{jci}
Tensor ricci_from_curvature(const SymplecticSpace& space, const Tensor& r);

// extension of a symmetric rank-2 tensor to a curvature-type rank-4 tensor;
// its trace gives back exactly the input
Tensor extended_ricci(const SymplecticSpace& space, const Tensor& sigma);

// trace-free remainder: r minus the extension of its trace
Tensor weyl_part(const SymplecticSpace& space, const Tensor& r);

// action of a curvature-type tensor on spinor-valued forms:
// (i/2) R^{ij}_{kl} eps^k wedge eps^l wedge (.) tensor e_i.e_j.(.)
SpinorForm apply_curvature_tensor(const SymplecticSpace& space, const Tensor& r,
                                  const SpinorForm& phi);

// the same action for a trace-type curvature, written through the twistor
// generators: (i/(l+1)) (i X^2 Theta^sigma + X Sigma^sigma)
SpinorForm ricci_twistor_action(const SymplecticSpace& space, const Tensor& sigma,
                                const SpinorForm& phi);

}  // namespace symtwist
