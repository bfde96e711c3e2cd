#pragma once

#include <map>
#include <vector>

#include "symtwist/linalg.hpp"
#include "symtwist/operators.hpp"
#include "symtwist/sector_basis.hpp"
#include "symtwist/spinor_form.hpp"
#include "symtwist/symplectic.hpp"

namespace symtwist {

// index set of summands: j = 0..i below the middle degree l, then shrinking
// by one per degree above it
bool xi_contains(int l, int i, int j);
// top block index at form degree i: i below the middle, 2l-i above
int xi_top(int l, int i);
// smallest cap at which every block chain of the (i, q) sector is complete
int sector_min_cap(const SymplecticSpace& space, int form_degree, int weight);

// Exact direct sum decomposition of one (form degree, weight) sector into
// the blocks E^{ij}: block j is the kernel of the form-degree-lowering
// twistor generator at degree j pushed up by i-j applications of the raising
// generator.  Construction verifies injectivity of every raising step and
// that the blocks fill the sector exactly; projections are exact.
class SectorDecomposition {
 public:
  SectorDecomposition(const SymplecticSpace& space, int form_degree, int weight, int cap);

  int form_degree() const { return form_degree_; }
  int weight() const { return weight_; }
  int cap() const { return cap_; }
  int top_block() const { return top_; }
  const SectorBasis& basis() const { return basis_; }
  int total_dim() const { return basis_.size(); }

  int block_dim(int j) const;
  // spanning columns of block j in ambient sector coordinates
  const std::vector<SparseVector>& block_columns(int j) const;
  SpinorForm block_element(int j, int k) const;

  // per-block components, summing to phi; throws when phi leaves the sector
  std::vector<SpinorForm> project(const SpinorForm& phi) const;
  SpinorForm project_block(const SpinorForm& phi, int j) const;

 private:
  SymplecticSpace space_;
  int form_degree_, weight_, cap_, top_;
  SectorBasis basis_;
  std::vector<std::vector<SparseVector>> blocks_;
  std::vector<int> offsets_;
  SpanSolver solver_;
};

// Cache of sector decompositions with automatically chosen caps; the entry
// point for projecting arbitrary elements onto the blocks
class DecompositionEngine {
 public:
  explicit DecompositionEngine(const SymplecticSpace& space) : space_(space) {}

  const SymplecticSpace& space() const { return space_; }
  const SectorDecomposition& sector(int form_degree, int weight);

  // p^{ij}: project the form-degree-i part of phi onto block j, all weights
  SpinorForm project(const SpinorForm& phi, int i, int j);
  // all block components of the form-degree-i part of phi
  std::vector<SpinorForm> components(const SpinorForm& phi, int i);

 private:
  SymplecticSpace space_;
  std::map<std::pair<int, int>, SectorDecomposition> cache_;
};

}  // namespace symtwist
