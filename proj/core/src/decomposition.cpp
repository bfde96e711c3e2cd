#include "symtwist/decomposition.hpp"

#include <stdexcept>

namespace symtwist {

namespace {

std::vector<SparseVector> kernel_block(const SymplecticSpace& space, int j, int q, int cap) {
  SectorBasis dom(space, j, q, cap);
  std::vector<SparseVector> out;
  if (dom.size() == 0) return out;
  if (j == 0) {
    for (int k = 0; k < dom.size(); ++k) out.push_back(SparseVector::single(k, Scalar(1)));
    return out;
  }
  SectorBasis cod(space, j - 1, q, cap);
  SparseMatrix y = operator_matrix(dom, cod, [&](const SpinorForm& p) { return apply_y(space, p); });
  return kernel_basis(y);
}

int rank_of(const std::vector<SparseVector>& columns, int dim) {
  SparseMatrix m(dim, static_cast<int>(columns.size()));
  for (size_t j = 0; j < columns.size(); ++j)
    for (const auto& [row, c] : columns[j]) m.set(row, static_cast<int>(j), c);
  return rank(m);
}

}  // namespace

bool xi_contains(int l, int i, int j) {
  if (i < 0 || i > 2 * l || j < 0) return false;
  return j <= xi_top(l, i);
}

int xi_top(int l, int i) { return i <= l ? i : 2 * l - i; }

int sector_min_cap(const SymplecticSpace& space, int form_degree, int weight) {
  return weight + std::min(form_degree, space.l());
}

SectorDecomposition::SectorDecomposition(const SymplecticSpace& space, int form_degree,
                                         int weight, int cap)
    : space_(space),
      form_degree_(form_degree),
      weight_(weight),
      cap_(cap),
      top_(xi_top(space.l(), form_degree)),
      basis_(space, form_degree, weight, cap),
      solver_(0, {}) {
  if (form_degree < 0 || form_degree > space.dim())
    throw std::invalid_argument("SectorDecomposition: form degree out of range");
  if (sector_min_cap(space, form_degree, weight) > cap)
    throw std::logic_error("SectorDecomposition: cap too small for a complete decomposition");

  std::vector<SparseVector> all_columns;
  for (int j = 0; j <= top_; ++j) {
    std::vector<SparseVector> vecs = kernel_block(space_, j, weight_, cap_);
    // push the block up the raising chain, verifying injectivity of each step
    for (int d = j; d < form_degree_; ++d) {
      SectorBasis from(space_, d, weight_, cap_);
      SectorBasis to(space_, d + 1, weight_, cap_);
      std::vector<SparseVector> next;
      next.reserve(vecs.size());
      for (const SparseVector& v : vecs)
        next.push_back(to.to_vector(apply_x(space_, from.to_form(v))));
      if (rank_of(next, to.size()) != static_cast<int>(next.size()))
        throw std::logic_error("SectorDecomposition: raising step dropped rank");
      vecs = std::move(next);
    }
    offsets_.push_back(static_cast<int>(all_columns.size()));
    for (const SparseVector& v : vecs) all_columns.push_back(v);
    blocks_.push_back(std::move(vecs));
  }
  offsets_.push_back(static_cast<int>(all_columns.size()));

  if (static_cast<int>(all_columns.size()) != basis_.size())
    throw std::logic_error("SectorDecomposition: block dimensions do not fill the sector");
  solver_ = SpanSolver(basis_.size(), all_columns);
  // directness: the concatenated columns must be a basis of the sector
  for (int k = 0; k < basis_.size(); ++k)
    if (!solver_.solve(SparseVector::single(k, Scalar(1))))
      throw std::logic_error("SectorDecomposition: blocks do not span the sector");
}

int SectorDecomposition::block_dim(int j) const {
  return static_cast<int>(blocks_.at(j).size());
}

const std::vector<SparseVector>& SectorDecomposition::block_columns(int j) const {
  return blocks_.at(j);
}

SpinorForm SectorDecomposition::block_element(int j, int k) const {
  return basis_.to_form(blocks_.at(j).at(k));
}

std::vector<SpinorForm> SectorDecomposition::project(const SpinorForm& phi) const {
  auto coords = solver_.solve(basis_.to_vector(phi));
  if (!coords) throw std::logic_error("SectorDecomposition: projection solve failed");
  std::vector<SpinorForm> out;
  out.reserve(top_ + 1);
  for (int j = 0; j <= top_; ++j) {
    SparseVector acc;
    for (int k = offsets_[j]; k < offsets_[j + 1]; ++k)
      acc.axpy((*coords)[k], blocks_[j][k - offsets_[j]]);
    out.push_back(basis_.to_form(acc));
  }
  return out;
}

SpinorForm SectorDecomposition::project_block(const SpinorForm& phi, int j) const {
  if (j < 0 || j > top_) return SpinorForm(space_.l(), cap_);
  return project(phi).at(j);
}

const SectorDecomposition& DecompositionEngine::sector(int form_degree, int weight) {
  auto key = std::make_pair(form_degree, weight);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    int cap = sector_min_cap(space_, form_degree, weight);
    it = cache_
             .emplace(std::piecewise_construct, std::forward_as_tuple(key),
                      std::forward_as_tuple(space_, form_degree, weight, cap))
             .first;
  }
  return it->second;
}

SpinorForm DecompositionEngine::project(const SpinorForm& phi, int i, int j) {
  SpinorForm out(space_.l(), phi.cap());
  if (!xi_contains(space_.l(), i, j)) return out;
  for (const auto& [sec, part] : phi.sector_split()) {
    if (sec.first != i) continue;
    out += sector(i, sec.second).project_block(part.with_cap(sector(i, sec.second).cap()), j);
  }
  return out;
}

std::vector<SpinorForm> DecompositionEngine::components(const SpinorForm& phi, int i) {
  std::vector<SpinorForm> out;
  int top = xi_top(space_.l(), i);
  for (int j = 0; j <= top; ++j) out.push_back(SpinorForm(space_.l(), phi.cap()));
  for (const auto& [sec, part] : phi.sector_split()) {
    if (sec.first != i) continue;
    const SectorDecomposition& dec = sector(i, sec.second);
    std::vector<SpinorForm> parts = dec.project(part.with_cap(dec.cap()));
    for (int j = 0; j <= top; ++j) out[j] += parts[j];
  }
  return out;
}

}  // namespace symtwist
