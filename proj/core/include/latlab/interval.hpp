#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "latlab/numeric.hpp"

namespace latlab {

// Closed interval with exact rational endpoints.
struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  }
  static RatInterval point(const Rat& v) { return RatInterval(v, v); }

  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool strictly_positive() const { return lo > 0; }
  bool strictly_negative() const { return hi < 0; }
  Rat abs_upper() const { return std::max(abs(lo), abs(hi)); }
  Rat abs_lower() const {  // min |x| over the interval
    if (contains_zero()) return Rat(0);
    return lo > 0 ? lo : -hi;
  }

  RatInterval operator+(const RatInterval& o) const {
    return RatInterval(lo + o.lo, hi + o.hi);
  }
  RatInterval operator-() const { return RatInterval(-hi, -lo); }
  RatInterval operator-(const RatInterval& o) const { return *this + (-o); }
  // Multiplication by an exact scalar.
  RatInterval scaled(const Rat& c) const {
    return c >= 0 ? RatInterval(lo * c, hi * c) : RatInterval(hi * c, lo * c);
  }
};

}  // namespace latlab
