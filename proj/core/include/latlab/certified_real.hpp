#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "latlab/interval.hpp"
#include "latlab/numeric.hpp"

namespace latlab {

// Exact representation of a computable real: a rational, a quadratic surd
// a + b*sqrt(d), or an arbitrary continued fraction given by its coefficient
// stream. Every value answers interval queries with rational endpoints; the
// intervals are nested as the precision shrinks and always contain the value.
class CertifiedReal {
 public:
  // Coefficient stream a_0, a_1, a_2, ...; a_i >= 1 required for i >= 1.
  // Returning nullopt ends the expansion (rational value).
  using CoeffFn = std::function<std::optional<Int>(std::size_t)>;

  static CertifiedReal rational(Rat v);
  // a + b*sqrt(d), d >= 0. Collapses to rational when the surd part vanishes
  // or d is a perfect square; otherwise d is reduced to its square-free core.
  static CertifiedReal quadratic(const Rat& a, const Rat& b, const Int& d);
  static CertifiedReal sqrt_of(const Int& d) { return quadratic(Rat(0), Rat(1), d); }
  static CertifiedReal continued_fraction(CoeffFn coeffs);

  bool is_rational() const;
  const Rat& rational_value() const;  // only when is_rational()

  // Interval of width <= precision containing the value.
  RatInterval enclosure(const Rat& precision) const;

  // Continued-fraction coefficients of the value, resumable one at a time.
  class CoeffStream {
   public:
    std::optional<Int> next();

   private:
    friend class CertifiedReal;
    struct RatState { std::vector<Int> coeffs; std::size_t pos = 0; };
    struct QuadState { Int p, q, num; };
    struct FnState { CoeffFn fn; std::size_t pos = 0; bool done = false; };
    // monostate first: the nested states are not yet default-constructible
    // while the enclosing class is still open
    std::variant<std::monostate, RatState, QuadState, FnState> state_;
  };
  CoeffStream cf_stream() const;

 private:
  struct Quad {
    Rat a, b;  // b != 0
    Int d;     // square-free, >= 2
  };
  std::variant<Rat, Quad, CoeffFn> rep_;
};

struct ConvergentSeq {
  std::vector<Rat> values;
  // The expansion ended before the requested depth (rational input).
  bool terminated_early = false;
};

// First `depth` continued-fraction convergents of x. Each convergent p/q
// satisfies |x - p/q| <= 1/q^2.
ConvergentSeq convergents(const CertifiedReal& x, std::size_t depth);

}  // namespace latlab
