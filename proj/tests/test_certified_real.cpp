#include <doctest.h>

#include <optional>

#include "latlab/certified_real.hpp"
#include "support.hpp"

using namespace latlab;

namespace {

// x lies in every enclosure, so p/q and x sit on the same side exactly when
// the whole interval does.
bool conv_brackets_alternate(const CertifiedReal& x, const std::vector<Rat>& vals) {
  const RatInterval e = x.enclosure(Rat(1, Int(1) << 80));
  for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
    const bool left = vals[i] <= e.lo, right = vals[i] >= e.hi;
    const bool nleft = vals[i + 1] <= e.lo, nright = vals[i + 1] >= e.hi;
    if (!(left || right) || !(nleft || nright)) return false;
    if (left == nleft) return false;  // consecutive convergents must alternate
  }
  return true;
}

}  // namespace

TEST_CASE("rational values terminate") {
  const CertifiedReal x = CertifiedReal::rational(Rat(7, 3));
  CHECK(x.is_rational());
  CHECK(x.rational_value() == Rat(7, 3));
  const ConvergentSeq s = convergents(x, 6);
  REQUIRE(s.values.size() == 2);  // [2; 3]
  CHECK(s.values[0] == 2);
  CHECK(s.values[1] == Rat(7, 3));
  CHECK(s.terminated_early);
  const RatInterval e = x.enclosure(Rat(1, 1000));
  CHECK(e.contains(Rat(7, 3)));
  CHECK(e.width() <= Rat(1, 1000));
}

TEST_CASE("negative rational expansion uses floor coefficients") {
  const ConvergentSeq s = convergents(CertifiedReal::rational(Rat(-7, 3)), 8);
  // -7/3 = [-3; 1, 2]
  REQUIRE(s.values.size() == 3);
  CHECK(s.values[0] == -3);
  CHECK(s.values[1] == -2);
  CHECK(s.values[2] == Rat(-7, 3));
  CHECK(s.terminated_early);
}

TEST_CASE("square root of two") {
  const CertifiedReal r2 = CertifiedReal::sqrt_of(Int(2));
  CHECK(!r2.is_rational());
  const ConvergentSeq s = convergents(r2, 7);
  REQUIRE(s.values.size() == 7);
  CHECK(!s.terminated_early);
  const Rat expect[] = {Rat(1),      Rat(3, 2),   Rat(7, 5),  Rat(17, 12),
                        Rat(41, 29), Rat(99, 70), Rat(239, 169)};
  for (int i = 0; i < 7; ++i) CHECK(s.values[i] == expect[i]);

  for (unsigned k : {4u, 16u, 64u, 200u}) {
    const RatInterval e = r2.enclosure(inv_pow2(k));
    CHECK(e.width() <= inv_pow2(k));
    CHECK(e.lo > 0);
    CHECK(e.lo * e.lo <= 2);
    CHECK(e.hi * e.hi >= 2);
  }
  // nesting as precision shrinks
  const RatInterval outer = r2.enclosure(Rat(1, 100));
  const RatInterval inner = r2.enclosure(Rat(1, 100000));
  CHECK(outer.lo <= inner.lo);
  CHECK(inner.hi <= outer.hi);
}

TEST_CASE("surds normalize their radicand") {
  // sqrt(8) == 2*sqrt(2)
  const CertifiedReal a = CertifiedReal::sqrt_of(Int(8));
  const CertifiedReal b = CertifiedReal::quadratic(Rat(0), Rat(2), Int(2));
  const ConvergentSeq sa = convergents(a, 6), sb = convergents(b, 6);
  CHECK(sa.values == sb.values);

  // perfect squares collapse to rationals
  const CertifiedReal c = CertifiedReal::sqrt_of(Int(9));
  CHECK(c.is_rational());
  CHECK(c.rational_value() == 3);
  CHECK(CertifiedReal::quadratic(Rat(1, 2), Rat(0), Int(2)).is_rational());
  CHECK_THROWS_AS(CertifiedReal::quadratic(Rat(0), Rat(1), Int(-2)),
                  std::invalid_argument);
}

TEST_CASE("negative surd expansion") {
  const CertifiedReal x = CertifiedReal::quadratic(Rat(0), Rat(-1), Int(2));
  const ConvergentSeq s = convergents(x, 8);
  REQUIRE(s.values.size() == 8);
  // -sqrt(2) = [-2; 1, 1, 2, 2, 2, ...]
  CHECK(s.values[0] == -2);
  CHECK(s.values[1] == -1);
  CHECK(s.values[2] == Rat(-3, 2));
  CHECK(conv_brackets_alternate(x, s.values));
  const RatInterval e = x.enclosure(Rat(1, 1 << 20));
  CHECK(e.hi < 0);
  CHECK(e.lo * e.lo >= 2);
  CHECK(e.hi * e.hi <= 2);
}

TEST_CASE("general quadratic expansions alternate around the value") {
  testsupport::Rng rng(61);
  const Int ds[] = {Int(2), Int(3), Int(5), Int(7), Int(10)};
  for (int it = 0; it < 60; ++it) {
    const Rat a(rng.range(-9, 9), rng.range(1, 7));
    Rat b(rng.range(-9, 9), rng.range(1, 7));
    if (b == 0) b = Rat(1, 3);
    const CertifiedReal x = CertifiedReal::quadratic(a, b, ds[it % 5]);
    CHECK(!x.is_rational());
    const ConvergentSeq s = convergents(x, 9);
    REQUIRE(s.values.size() == 9);
    CHECK(conv_brackets_alternate(x, s.values));
    // |x - p/q| <= 1/q^2 against a much finer enclosure
    const RatInterval fine = x.enclosure(Rat(1, Int(1) << 120));
    for (const Rat& pq : s.values) {
      using boost::multiprecision::denominator;
      const Rat err = std::max(abs(fine.lo - pq), abs(fine.hi - pq));
      const Int q = denominator(pq);
      CHECK(err <= Rat(1, q * q) + fine.width());
    }
  }
}

TEST_CASE("coefficient streams drive arbitrary expansions") {
  // the stream [1; 2, 2, 2, ...] is sqrt(2)
  const CertifiedReal cf = CertifiedReal::continued_fraction(
      [](std::size_t i) -> std::optional<Int> { return Int(i == 0 ? 1 : 2); });
  CHECK(!cf.is_rational());
  const ConvergentSeq s = convergents(cf, 7);
  CHECK(s.values == convergents(CertifiedReal::sqrt_of(Int(2)), 7).values);
  const RatInterval e = cf.enclosure(Rat(1, 1000000));
  CHECK(e.lo * e.lo <= 2);
  CHECK(e.hi * e.hi >= 2);

  // a stream that dries up marks early termination
  const CertifiedReal finite = CertifiedReal::continued_fraction(
      [](std::size_t i) -> std::optional<Int> {
        if (i >= 3) return std::nullopt;
        return Int(i + 1);
      });
  const ConvergentSeq f = convergents(finite, 10);
  CHECK(f.values.size() == 3);
  CHECK(f.terminated_early);
  // [1; 2, 3] = 10/7
  CHECK(f.values.back() == Rat(10, 7));

  // invalid tails are rejected
  const CertifiedReal bad = CertifiedReal::continued_fraction(
      [](std::size_t i) -> std::optional<Int> { return Int(i == 0 ? 1 : 0); });
  CHECK_THROWS_AS(convergents(bad, 4), std::invalid_argument);
}

TEST_CASE("coefficient streams are resumable") {
  const CertifiedReal x = CertifiedReal::quadratic(Rat(1, 2), Rat(-3, 4), Int(2));
  CertifiedReal::CoeffStream stream = x.cf_stream();
  std::vector<Int> head;
  for (int i = 0; i < 10; ++i) {
    const std::optional<Int> c = stream.next();
    REQUIRE(c.has_value());
    head.push_back(*c);
    if (i > 0) CHECK(*c >= 1);
  }
  // restarting reproduces the same prefix
  CertifiedReal::CoeffStream again = x.cf_stream();
  for (const Int& c : head) CHECK(*again.next() == c);
}
