#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latlab/gamma22.hpp"
#include "latlab/heights.hpp"

namespace latlab {

// An ordering functional vanished on a root, so it cannot split the root
// system into positives and negatives.
struct ZeroOnRoot : Error {
  Vec22 root;
  explicit ZeroOnRoot(Vec22 r)
      : Error("ZeroOnRoot", "ordering functional vanishes on a root"),
        root(std::move(r)) {}
};

// First nonzero slot of (k, l, m, n) is positive.
bool lex_positive(const Vec22& v);

// Assigns a side to every root: lexicographic, by sign of inner22(rho, .),
// or by sign of a real height functional (certified by intervals).
class OrderingFunctional {
 public:
  static OrderingFunctional lex();
  static OrderingFunctional linear(Vec22 rho);
  static OrderingFunctional linear_real(HeightFunctional h);

  // Throws ZeroOnRoot when the functional vanishes on v (for linear_real:
  // when certification cannot separate the value from zero).
  bool is_positive(const Vec22& v) const;

 private:
  struct Lex {};
  struct Linear { Vec22 rho; };
  struct LinearReal { HeightFunctional h; };
  std::variant<Lex, Linear, LinearReal> kind_;
};

struct SplitRoots {
  std::vector<Vec22> positives, negatives;
};

// Partition of the input; input order preserved within each side.
SplitRoots split_positive(const std::vector<Vec22>& roots,
                          const OrderingFunctional& ord);

struct CandidateBasis {
  std::vector<Vec22> candidates;  // lexicographic order
  int search_box = 0;
  std::vector<std::vector<Int>> gram;  // pairwise inner22 of candidates
};

// Positive roots that are not the sum of two positive roots from the input.
// Box-relative evidence only: a candidate may decompose in a larger box.
CandidateBasis indecomposables(const std::vector<Vec22>& positives, int box);

struct GenerationReport {
  int box = 0;
  std::vector<Vec22> candidates;
  std::vector<Vec22> unreachable;  // lex-positive roots in the box that are
                                   // not nonneg integer combos of candidates
  std::size_t checked_count = 0;
};

// Complete search within the box: a root counts as reachable only if an
// exact nonnegative integer combination hits it.
GenerationReport generation_check(const CandidateBasis& basis, int box);

enum class CartanCondition { Symmetry, OffDiagonalSign, Integrality };
const char* cartan_condition_name(CartanCondition c);

struct CartanViolation {
  CartanCondition condition;
  int i, j;  // 1-based, as in a_ij
  friend bool operator==(const CartanViolation&, const CartanViolation&) = default;
};

// Checks the generalized Cartan matrix conditions: symmetry, nonpositive
// off-diagonal entries, and 2*a_ij/a_ii integral whenever a_ii > 0. Zero or
// negative diagonal entries are allowed.
std::vector<CartanViolation> cartan_check(const std::vector<std::vector<Rat>>& m);

}  // namespace latlab
