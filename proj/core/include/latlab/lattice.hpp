#pragma once

#include <compare>
#include <initializer_list>
#include <utility>
#include <vector>

#include "latlab/errors.hpp"
#include "latlab/numeric.hpp"

namespace latlab {

struct LatticeVector {
  std::vector<Int> coords;

  LatticeVector() = default;
  explicit LatticeVector(std::vector<Int> c) : coords(std::move(c)) {}
  LatticeVector(std::initializer_list<long long> c) {
    coords.reserve(c.size());
    for (long long v : c) coords.emplace_back(v);
  }

  std::size_t size() const { return coords.size(); }
  const Int& operator[](std::size_t i) const { return coords[i]; }
  Int& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const;
  LatticeVector operator-() const;
  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords == b.coords;
  }
  // Lexicographic; shorter vectors compare as prefixes.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return a.coords < b.coords;
  }
};

struct LatticeClass {
  bool is_even = false;
  Int abs_det;
  std::pair<int, int> signature;  // (positive, negative) inertia counts
};

enum class StandardLattice { II11, E8 };

// Integral lattice given by a symmetric Gram matrix over Z.
class GramLattice {
 public:
  static GramLattice standard(StandardLattice kind);
  // Even self-dual lattice of signature (p, q): q copies of the hyperbolic
  // plane plus (p - q)/8 copies of the rank-8 positive definite piece.
  // Requires p >= q >= 0, p + q >= 1 and p - q divisible by 8.
  static GramLattice gamma(int p, int q);
  static GramLattice from_gram(const std::vector<std::vector<Int>>& g);

  GramLattice direct_sum(const GramLattice& other) const;

  int rank() const { return rank_; }
  const Int& gram(int i, int j) const { return gram_[idx(i, j)]; }
  std::vector<std::vector<Int>> gram_rows() const;

  Int inner(const LatticeVector& x, const LatticeVector& y) const;
  Int norm(const LatticeVector& x) const { return inner(x, x); }

  // Parity, |det|, and inertia signature of the form. Exact; throws
  // DegenerateForm when det == 0.
  LatticeClass classify() const;

  // All nonzero vectors of the given norm with every coordinate in
  // [-box, box], in lexicographic order.
  std::vector<LatticeVector> enumerate_norm(const Int& target, int box) const;

 private:
  GramLattice(int rank, std::vector<Int> packed)
      : rank_(rank), gram_(std::move(packed)) {}
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * rank_ + j;
  }

  int rank_ = 0;
  std::vector<Int> gram_;  // row-major
};

}  // namespace latlab
