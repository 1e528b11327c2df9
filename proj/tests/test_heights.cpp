#include <doctest.h>

#include "latlab/heights.hpp"
#include "support.hpp"

using namespace latlab;

namespace {

HeightFunctional sqrt2_functional() {
  return HeightFunctional{CertifiedReal::rational(Rat(0)), CertifiedReal::sqrt_of(Int(2)),
                          CertifiedReal::rational(Rat(0)), CertifiedReal::rational(Rat(1))};
}

}  // namespace

TEST_CASE("interval evaluation matches the exact rational case") {
  const HeightFunctional h{CertifiedReal::rational(Rat(1, 2)), CertifiedReal::rational(Rat(-2)),
                           CertifiedReal::rational(Rat(3)), CertifiedReal::rational(Rat(5, 7))};
  testsupport::Rng rng(71);
  for (int it = 0; it < 100; ++it) {
    const Vec22 v = rng.vec22(20);
    // h(k,l;m,n) = -(a*l + b*k + c*n + d*m)
    const Rat exact = -(Rat(1, 2) * Rat(v.l) + Rat(-2) * Rat(v.k) + Rat(3) * Rat(v.n) +
                        Rat(5, 7) * Rat(v.m));
    const RatInterval e = height(h, v, Rat(1, 1000));
    CHECK(e.is_point());
    CHECK(e.lo == exact);
  }
}

TEST_CASE("interval evaluation is certified for irrational coefficients") {
  const HeightFunctional h = sqrt2_functional();
  testsupport::Rng rng(72);
  for (int it = 0; it < 50; ++it) {
    const Vec22 v = rng.vec22(20);
    const RatInterval wide = height(h, v, Rat(1, 100));
    const RatInterval tight = height(h, v, Rat(1, 1000000));
    CHECK(wide.width() <= Rat(1, 100));
    CHECK(tight.width() <= Rat(1, 1000000));
    // consistency: the tight interval refines the wide one
    CHECK(wide.lo <= tight.hi);
    CHECK(tight.lo <= wide.hi);
  }
  CHECK_THROWS_AS(height(h, Vec22(1, 0, 0, 0), Rat(0)), std::invalid_argument);
}

TEST_CASE("rational functionals give exact zeros") {
  const HeightFunctional h{CertifiedReal::rational(Rat(1)), CertifiedReal::rational(Rat(2)),
                           CertifiedReal::rational(Rat(3)), CertifiedReal::rational(Rat(4))};
  const HeightOutcome o = small_height_root(h, Rat(1, 1000));
  CHECK(o.kind == HeightOutcome::Kind::ExactZero);
  CHECK(o.bound == 0);
  CHECK(is_root22(o.alpha));
  const RatInterval v = height(h, o.alpha, Rat(1));
  CHECK(v.is_point());
  CHECK(v.lo == 0);
}

TEST_CASE("rational functionals with denominators clear correctly") {
  const HeightFunctional h{CertifiedReal::rational(Rat(1, 3)), CertifiedReal::rational(Rat(-5, 7)),
                           CertifiedReal::rational(Rat(2, 21)), CertifiedReal::rational(Rat(0))};
  const HeightOutcome o = small_height_root(h, Rat(1, 10));
  CHECK(o.kind == HeightOutcome::Kind::ExactZero);
  const RatInterval v = height(h, o.alpha, Rat(1));
  CHECK(v.is_point());
  CHECK(v.lo == 0);
}

TEST_CASE("sqrt(2) functional certifies small nonzero heights") {
  const HeightFunctional h = sqrt2_functional();
  Rat prev_bound(1);
  for (int exp = 1; exp <= 6; ++exp) {
    Rat eps(1);
    for (int i = 0; i < exp; ++i) eps /= 10;
    const HeightOutcome o = small_height_root(h, eps);
    CHECK(o.kind == HeightOutcome::Kind::SmallNonzero);
    CHECK(is_root22(o.alpha));
    CHECK(o.bound > 0);
    CHECK(o.bound < eps);
    // independent certification straight from the interval arithmetic
    const RatInterval v = height(h, o.alpha, eps / (Int(1) << 24));
    CHECK(!v.contains_zero());
    CHECK(v.abs_upper() < eps);
    prev_bound = o.bound;
  }
}

TEST_CASE("pinned outcomes for the sqrt(2) functional") {
  const HeightFunctional h = sqrt2_functional();
  const HeightOutcome coarse = small_height_root(h, Rat(1, 10));
  CHECK(coarse.alpha == Vec22(-5, 3, 7, 2));
  const HeightOutcome fine = small_height_root(h, Rat(1, 100));
  CHECK(fine.alpha == Vec22(70, 41, -99, 29));
}

TEST_CASE("swapped-cone coefficients reach the same certification") {
  // b and d rational, a and c carry the irrational data
  const HeightFunctional h{CertifiedReal::sqrt_of(Int(2)), CertifiedReal::rational(Rat(0)),
                           CertifiedReal::rational(Rat(1)), CertifiedReal::rational(Rat(0))};
  const HeightOutcome o = small_height_root(h, Rat(1, 1000));
  CHECK(o.kind == HeightOutcome::Kind::SmallNonzero);
  CHECK(is_root22(o.alpha));
  const RatInterval v = height(h, o.alpha, Rat(1, 1 << 30));
  CHECK(!v.contains_zero());
  CHECK(v.abs_upper() < Rat(1, 1000));
}

TEST_CASE("mixed rational and irrational coefficients") {
  const HeightFunctional h{CertifiedReal::rational(Rat(1)), CertifiedReal::sqrt_of(Int(3)),
                           CertifiedReal::rational(Rat(-2)), CertifiedReal::rational(Rat(1))};
  const HeightOutcome o = small_height_root(h, Rat(1, 10000));
  CHECK(o.kind == HeightOutcome::Kind::SmallNonzero);
  const RatInterval v = height(h, o.alpha, Rat(1, Int(1) << 40));
  CHECK(!v.contains_zero());
  CHECK(v.abs_upper() < Rat(1, 10000));
}

TEST_CASE("budget exhaustion reports inconclusive") {
  const HeightFunctional h = sqrt2_functional();
  try {
    small_height_root(h, Rat(1, Int(1) << 200), 3);
    FAIL("expected Inconclusive");
  } catch (const Inconclusive& e) {
    CHECK(e.budget == 3);
    CHECK(std::string(e.code()) == "Inconclusive");
  }
}

TEST_CASE("degenerate coefficient layouts stay inconclusive rather than lie") {
  // b == 0 with d irrational starves the family construction
  const HeightFunctional h{CertifiedReal::rational(Rat(0)), CertifiedReal::rational(Rat(0)),
                           CertifiedReal::rational(Rat(0)), CertifiedReal::sqrt_of(Int(2))};
  CHECK_THROWS_AS(small_height_root(h, Rat(1, 100), 8), Inconclusive);
}

TEST_CASE("input validation") {
  const HeightFunctional h = sqrt2_functional();
  CHECK_THROWS_AS(small_height_root(h, Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(small_height_root(h, Rat(-1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(small_height_root(h, Rat(1, 10), 0), std::invalid_argument);
  const HeightFunctional zero{CertifiedReal::rational(Rat(0)), CertifiedReal::rational(Rat(0)),
                              CertifiedReal::rational(Rat(0)), CertifiedReal::rational(Rat(0))};
  CHECK_THROWS_AS(small_height_root(zero, Rat(1, 10)), std::invalid_argument);
}
