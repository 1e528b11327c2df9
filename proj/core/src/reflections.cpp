#include "latlab/reflections.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace latlab {

namespace {

void require_norm_two(const GramLattice& L, const LatticeVector& alpha) {
  if (L.norm(alpha) != 2)
    throw NotNormTwo("reflection vector must have norm 2");
}

bool in_box(const LatticeVector& v, int box) {
  for (const Int& c : v.coords)
    if (c < -box || c > box) return false;
  return true;
}

}  // namespace

LatticeVector reflect(const GramLattice& L, const LatticeVector& alpha,
                      const LatticeVector& gamma) {
  require_norm_two(L, alpha);
  const Int c = L.inner(gamma, alpha);
  LatticeVector out = gamma;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * alpha[i];
  return out;
}

ReflectionSpec::ReflectionSpec(GramLattice lattice, LatticeVector alpha)
    : lattice_(std::move(lattice)), alpha_(std::move(alpha)) {
  require_norm_two(lattice_, alpha_);
}

bool is_symmetry(const GramLattice& L, const LatticeVector& alpha,
                 const std::vector<LatticeVector>& sample) {
  require_norm_two(L, alpha);
  std::vector<LatticeVector> images;
  images.reserve(sample.size());
  for (const auto& v : sample) {
    LatticeVector w = reflect(L, alpha, v);
    if (reflect(L, alpha, w) != v) return false;
    images.push_back(std::move(w));
  }
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i; j < sample.size(); ++j)
      if (L.inner(sample[i], sample[j]) != L.inner(images[i], images[j]))
        return false;
  return true;
}

OrbitResult orbit(const GramLattice& L, const LatticeVector& start,
                  const std::vector<LatticeVector>& alphas, int box) {
  if (box <= 0) throw std::invalid_argument("box must be positive");
  for (const auto& a : alphas) require_norm_two(L, a);

  OrbitResult result;
  if (!in_box(start, box)) {
    result.frontier_clipped = true;
    return result;
  }
  std::set<LatticeVector> seen{start};
  std::deque<LatticeVector> frontier{start};
  while (!frontier.empty()) {
    LatticeVector v = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& a : alphas) {
      LatticeVector w = reflect(L, a, v);
      if (!in_box(w, box)) {
        result.frontier_clipped = true;
        continue;
      }
      if (seen.insert(w).second) frontier.push_back(w);
    }
  }
  result.vectors.assign(seen.begin(), seen.end());
  return result;
}

}  // namespace latlab
