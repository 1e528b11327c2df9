#pragma once

#include <mutex>
#include <vector>

#include "latlab/lattice.hpp"
#include "latlab/numeric.hpp"

namespace latlab {

// Coefficients of prod_m (1 - q^m)^(-k): the number of partitions into
// positive integers with k colours. Memoizes the series prefix.
class PartitionTable {
 public:
  explicit PartitionTable(int colors);
  int colors() const { return colors_; }
  // p_k(m); 0 for m < 0.
  Int value(long long m) const;

 private:
  void extend(std::size_t limit) const;

  int colors_;
  mutable std::mutex mu_;
  mutable std::vector<Int> coeffs_;  // coeffs_[m] = p_k(m), filled to a prefix
};

Int colored_partitions(int colors, long long m);

// mult(alpha) = p_{d-1}(1 - normsq/2) - p_{d-1}(-normsq/2); zero once the
// arguments go negative, so nonzero exactly when normsq <= 2.
Int root_multiplicity(int rank_d, const Int& normsq);

struct AlgebraRootInfo {
  bool is_root = false;
  Int multiplicity;
};

// v is a root of the lattice algebra when it is nonzero and its multiplicity
// is positive, i.e. norm <= 2. Requires an even lattice.
AlgebraRootInfo is_algebra_root(const GramLattice& L, const LatticeVector& v);

}  // namespace latlab
