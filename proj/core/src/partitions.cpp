#include "latlab/partitions.hpp"

#include <map>
#include <stdexcept>

namespace latlab {

PartitionTable::PartitionTable(int colors) : colors_(colors) {
  if (colors < 1) throw std::invalid_argument("colors must be >= 1");
  coeffs_.assign(1, Int(1));
}

// Multiplies the cached series prefix by (1 - q^m)^(-k) for the missing m.
// One factor (1 - q^m)^(-1) is the running-sum pass c[i] += c[i - m],
// applied k times.
void PartitionTable::extend(std::size_t limit) const {
  if (coeffs_.size() > limit) return;
  // Redo the product from scratch at the wider truncation; each pass is
  // cheap and the table is small at desk scale.
  std::vector<Int> c(limit + 1, Int(0));
  c[0] = 1;
  for (std::size_t m = 1; m <= limit; ++m)
    for (int rep = 0; rep < colors_; ++rep)
      for (std::size_t i = m; i <= limit; ++i) c[i] += c[i - m];
  coeffs_ = std::move(c);
}

Int PartitionTable::value(long long m) const {
  if (m < 0) return 0;
  const auto idx = static_cast<std::size_t>(m);
  std::lock_guard<std::mutex> lock(mu_);
  if (idx >= coeffs_.size()) {
    std::size_t limit = coeffs_.size() * 2;
    if (limit <= idx) limit = idx + 1;
    extend(limit);
  }
  return coeffs_[idx];
}

Int colored_partitions(int colors, long long m) {
  static std::mutex tables_mu;
  static std::map<int, PartitionTable>* tables = new std::map<int, PartitionTable>();
  PartitionTable* table;
  {
    std::lock_guard<std::mutex> lock(tables_mu);
    table = &tables->try_emplace(colors, colors).first->second;
  }
  return table->value(m);
}

Int root_multiplicity(int rank_d, const Int& normsq) {
  if (rank_d < 2) throw std::invalid_argument("rank must be >= 2");
  if (normsq % 2 != 0) throw std::invalid_argument("norm must be even");
  const Int half = normsq / 2;
  const Int hi = 1 - half;
  const Int lo = -half;
  auto eval = [&](const Int& m) -> Int {
    if (m < 0) return 0;
    if (!fits_int64(m)) throw std::invalid_argument("norm out of tractable range");
    return colored_partitions(rank_d - 1, m.convert_to<long long>());
  };
  return eval(hi) - eval(lo);
}

AlgebraRootInfo is_algebra_root(const GramLattice& L, const LatticeVector& v) {
  for (int i = 0; i < L.rank(); ++i)
    if (L.gram(i, i) % 2 != 0)
      throw std::invalid_argument("lattice must be even");
  AlgebraRootInfo info;
  info.multiplicity = 0;
  if (v.is_zero()) return info;
  const Int mult = root_multiplicity(L.rank(), L.norm(v));
  if (mult > 0) {
    info.is_root = true;
    info.multiplicity = mult;
  }
  return info;
}

}  // namespace latlab
