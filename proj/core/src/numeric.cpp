#include "latlab/numeric.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace latlab {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("floor_div by zero");
  Int q = a / b;  // truncating
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

Int gcd_abs(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

ExtGcd ext_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  return {old_r, old_s, old_t};
}

Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt_floor of negative");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int s = boost::multiprecision::sqrt(n);
  return s * s == n;
}

Int floor_rat(const Rat& x) {
  return floor_div(Int(boost::multiprecision::numerator(x)),
                   Int(boost::multiprecision::denominator(x)));
}

Int round_rat(const Rat& x) { return floor_rat(x + Rat(1, 2)); }

Int pow2_int(unsigned k) {
  Int r = 1;
  return r << k;
}

Rat inv_pow2(unsigned k) { return Rat(1, pow2_int(k)); }

bool fits_int64(const Int& x) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  return x >= lo && x <= hi;
}

unsigned worker_limit() {
  if (const char* env = std::getenv("LATTICE_LAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace latlab
