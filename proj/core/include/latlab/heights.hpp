#pragma once

#include <string>

#include "latlab/certified_real.hpp"
#include "latlab/gamma22.hpp"
#include "latlab/interval.hpp"

namespace latlab {

// Real-valued functional h(k,l;m,n) = -a*l - b*k - c*n - d*m. With exact
// integer coefficients (a,b,c,d) this is inner22((a,b;c,d), .).
struct HeightFunctional {
  CertifiedReal a, b, c, d;
  bool all_rational() const {
    return a.is_rational() && b.is_rational() && c.is_rational() && d.is_rational();
  }
};

// Interval of width <= precision containing h(v).
RatInterval height(const HeightFunctional& h, const Vec22& v, const Rat& precision);

// The search could not certify a nonzero small height within its budget;
// h may vanish exactly on a root.
struct Inconclusive : Error {
  int budget;
  explicit Inconclusive(int budget_)
      : Error("Inconclusive",
              "no certified small nonzero height within " +
                  std::to_string(budget_) + " convergent deepenings"),
        budget(budget_) {}
};

struct HeightOutcome {
  enum class Kind { ExactZero, SmallNonzero };
  Kind kind;
  Vec22 alpha;
  // ExactZero: 0. SmallNonzero: certified 0 < |h(alpha)| < bound < epsilon.
  Rat bound;
};

// Rational coefficients: clears denominators and returns a root with exactly
// zero height. Otherwise hunts along root families built from continued
// fraction convergents of b and d (or of a and c, through the light-cone
// swap (k,l;m,n) -> (l,k;n,m), when b and d are both rational) for a root
// whose height is certified nonzero and below epsilon.
HeightOutcome small_height_root(const HeightFunctional& h, const Rat& epsilon,
                                int budget = 64);

}  // namespace latlab
