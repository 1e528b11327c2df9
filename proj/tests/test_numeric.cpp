#include <doctest.h>

#include "latlab/numeric.hpp"
#include "support.hpp"

using namespace latlab;

TEST_CASE("floor division pins the sign cases") {
  CHECK(floor_div(Int(7), Int(2)) == 3);
  CHECK(floor_div(Int(-7), Int(2)) == -4);
  CHECK(floor_div(Int(7), Int(-2)) == -4);
  CHECK(floor_div(Int(-7), Int(-2)) == 3);
  CHECK(floor_div(Int(6), Int(3)) == 2);
  CHECK(floor_div(Int(-6), Int(3)) == -2);
  CHECK(floor_mod(Int(7), Int(2)) == 1);
  CHECK(floor_mod(Int(-7), Int(2)) == 1);
  CHECK(floor_mod(Int(7), Int(-2)) == -1);
  CHECK(floor_mod(Int(-7), Int(-2)) == -1);
}

TEST_CASE("floor division identity on random pairs") {
  testsupport::Rng rng(11);
  for (int it = 0; it < 2000; ++it) {
    const Int a(rng.range(-1000000, 1000000));
    Int d(rng.range(-1000, 1000));
    if (d == 0) d = 1;
    const Int q = floor_div(a, d);
    const Int r = floor_mod(a, d);
    CHECK(a == d * q + r);
    CHECK(r * (d > 0 ? 1 : -1) >= 0);
    CHECK(abs(r) < abs(d));
  }
}

TEST_CASE("extended gcd") {
  const ExtGcd z = ext_gcd(Int(0), Int(0));
  CHECK(z.g == 0);
  const ExtGcd e = ext_gcd(Int(0), Int(5));
  CHECK(e.g == 5);
  CHECK(e.y * 5 == 5);
  testsupport::Rng rng(12);
  for (int it = 0; it < 2000; ++it) {
    const Int a(rng.range(-100000, 100000));
    const Int b(rng.range(-100000, 100000));
    const ExtGcd r = ext_gcd(a, b);
    CHECK(r.g >= 0);
    CHECK(r.g == gcd_abs(a, b));
    CHECK(a * r.x + b * r.y == r.g);
    if (r.g != 0) {
      CHECK(a % r.g == 0);
      CHECK(b % r.g == 0);
    }
  }
}

TEST_CASE("integer square roots") {
  CHECK(isqrt_floor(Int(0)) == 0);
  CHECK(isqrt_floor(Int(1)) == 1);
  CHECK(isqrt_floor(Int(2)) == 1);
  CHECK(isqrt_floor(Int(35)) == 5);
  CHECK(isqrt_floor(Int(36)) == 6);
  testsupport::Rng rng(13);
  for (int it = 0; it < 500; ++it) {
    Int n(rng.range(0, 1000000));
    n *= n;
    n += rng.range(0, 1000000);
    const Int s = isqrt_floor(n);
    CHECK(s * s <= n);
    CHECK((s + 1) * (s + 1) > n);
  }
  CHECK(is_perfect_square(Int(49)));
  CHECK(!is_perfect_square(Int(48)));
  CHECK(is_perfect_square(Int(0)));
}

TEST_CASE("rational floor and round") {
  CHECK(floor_rat(Rat(7, 2)) == 3);
  CHECK(floor_rat(Rat(-7, 2)) == -4);
  CHECK(floor_rat(Rat(6, 3)) == 2);
  CHECK(round_rat(Rat(1, 2)) == 1);   // half rounds up
  CHECK(round_rat(Rat(-1, 2)) == 0);
  CHECK(round_rat(Rat(3, 2)) == 2);
  CHECK(round_rat(Rat(-5, 2)) == -2);
  CHECK(round_rat(Rat(22, 7)) == 3);
  CHECK(round_rat(Rat(-22, 7)) == -3);
}

TEST_CASE("powers of two and int64 range") {
  CHECK(pow2_int(0) == 1);
  CHECK(pow2_int(10) == 1024);
  CHECK(inv_pow2(3) == Rat(1, 8));
  const Int hi("9223372036854775807");
  const Int lo("-9223372036854775808");
  CHECK(fits_int64(hi));
  CHECK(fits_int64(lo));
  CHECK(!fits_int64(hi + 1));
  CHECK(!fits_int64(lo - 1));
}

TEST_CASE("worker limit is sane") {
  CHECK(worker_limit() >= 1);
}
