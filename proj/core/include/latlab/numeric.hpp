#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace latlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Floor division; remainder has the sign of b (in [0, |b|) for b > 0).
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);

// gcd of absolute values; gcd_abs(0, x) == |x|.
Int gcd_abs(const Int& a, const Int& b);

struct ExtGcd {
  Int g, x, y;  // a*x + b*y == g == gcd(|a|, |b|)
};
ExtGcd ext_gcd(Int a, Int b);

// floor(sqrt(n)), n >= 0 required.
Int isqrt_floor(const Int& n);
bool is_perfect_square(const Int& n);

Int floor_rat(const Rat& x);
// Nearest integer, ties broken upward: round_rat(1/2) == 1, round_rat(-1/2) == 0.
Int round_rat(const Rat& x);

Int pow2_int(unsigned k);
Rat inv_pow2(unsigned k);  // 2^-k

bool fits_int64(const Int& x);

// Worker cap for parallel enumeration, from LATTICE_LAB_THREADS when set,
// otherwise hardware concurrency. Always >= 1.
unsigned worker_limit();

}  // namespace latlab
