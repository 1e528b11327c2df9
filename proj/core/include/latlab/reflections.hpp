#pragma once

#include <vector>

#include "latlab/lattice.hpp"

namespace latlab {

// w_alpha(gamma) = gamma - (gamma, alpha) * alpha for alpha of norm 2.
// Always integral on an even lattice.
LatticeVector reflect(const GramLattice& L, const LatticeVector& alpha,
                      const LatticeVector& gamma);

// Bundles a lattice with a validated norm-2 mirror vector.
class ReflectionSpec {
 public:
  ReflectionSpec(GramLattice lattice, LatticeVector alpha);
  const GramLattice& lattice() const { return lattice_; }
  const LatticeVector& alpha() const { return alpha_; }
  LatticeVector apply(const LatticeVector& gamma) const {
    return reflect(lattice_, alpha_, gamma);
  }

 private:
  GramLattice lattice_;
  LatticeVector alpha_;
};

// Checks that the reflection preserves all pairwise inner products of the
// sample and squares to the identity on it.
bool is_symmetry(const GramLattice& L, const LatticeVector& alpha,
                 const std::vector<LatticeVector>& sample);

struct OrbitResult {
  std::vector<LatticeVector> vectors;  // sorted lexicographically
  // True when some image left the coordinate box and was discarded, so the
  // returned set may be a proper subset of the full orbit.
  bool frontier_clipped = false;
};

// Breadth-first closure of {start} under the given norm-2 reflections,
// restricted to max-coordinate <= box.
OrbitResult orbit(const GramLattice& L, const LatticeVector& start,
                  const std::vector<LatticeVector>& alphas, int box);

}  // namespace latlab
