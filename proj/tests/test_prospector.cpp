#include <doctest.h>

#include <algorithm>
#include <set>

#include "latlab/prospector.hpp"
#include "support.hpp"

using namespace latlab;

TEST_CASE("lexicographic positivity") {
  CHECK(lex_positive(Vec22(1, -5, 2, 0)));
  CHECK(lex_positive(Vec22(0, 0, 0, 3)));
  CHECK(!lex_positive(Vec22(0, 0, 0, -3)));
  CHECK(!lex_positive(Vec22(-1, 5, 0, 0)));
  CHECK(!lex_positive(Vec22(0, 0, 0, 0)));
  // the ordering interface refuses to sign the zero vector
  CHECK_THROWS_AS(OrderingFunctional::lex().is_positive(Vec22(0, 0, 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("lex split is a perfect halving") {
  for (int box = 1; box <= 4; ++box) {
    const auto roots = enumerate_roots22(box);
    const SplitRoots s = split_positive(roots, OrderingFunctional::lex());
    CHECK(s.positives.size() == roots.size() / 2);
    CHECK(s.negatives.size() == roots.size() / 2);
    std::set<Vec22> neg(s.negatives.begin(), s.negatives.end());
    for (const auto& p : s.positives) {
      CHECK(lex_positive(p));
      CHECK(neg.count(-p) == 1);
    }
  }
}

TEST_CASE("linear orderings match a sign scan and may die on a root") {
  testsupport::Rng rng(81);
  const auto roots = enumerate_roots22(2);
  for (int it = 0; it < 120; ++it) {
    const Vec22 rho = rng.vec22(6);
    bool vanishes = false;
    for (const auto& r : roots) vanishes = vanishes || inner22(rho, r) == 0;
    const OrderingFunctional ord = OrderingFunctional::linear(rho);
    if (vanishes) {
      CHECK_THROWS_AS(split_positive(roots, ord), ZeroOnRoot);
      continue;
    }
    const SplitRoots s = split_positive(roots, ord);
    for (const auto& p : s.positives) CHECK(inner22(rho, p) > 0);
    for (const auto& n : s.negatives) CHECK(inner22(rho, n) < 0);
    CHECK(s.positives.size() + s.negatives.size() == roots.size());
  }
}

TEST_CASE("the zero-on-root report carries the witness") {
  try {
    split_positive(enumerate_roots22(1), OrderingFunctional::linear(Vec22(1, 1, 1, 1)));
    FAIL("expected ZeroOnRoot");
  } catch (const ZeroOnRoot& e) {
    CHECK(is_root22(e.root));
    CHECK(inner22(Vec22(1, 1, 1, 1), e.root) == 0);
    CHECK(std::string(e.code()) == "ZeroOnRoot");
  }
}

TEST_CASE("certified real ordering agrees with the exact signs") {
  const HeightFunctional h{CertifiedReal::rational(Rat(0)), CertifiedReal::sqrt_of(Int(2)),
                           CertifiedReal::rational(Rat(0)), CertifiedReal::rational(Rat(1))};
  const OrderingFunctional ord = OrderingFunctional::linear_real(h);
  // sign of sqrt(2)*k + m, decided by comparing 2k^2 with m^2
  auto val_sign = [](const Int& k, const Int& m) -> int {
    if (k == 0) return m == 0 ? 0 : (m > 0 ? 1 : -1);
    if (m == 0 || (k > 0) == (m > 0)) return k > 0 ? 1 : -1;
    const Int lhs = 2 * k * k, rhs = m * m;
    if (k > 0) return lhs > rhs ? 1 : -1;
    return rhs > lhs ? 1 : -1;
  };
  for (const auto& r : enumerate_roots22(3)) {
    const int s = val_sign(r.k, r.m);
    REQUIRE(s != 0);  // k == m == 0 is impossible on a root
    // h(r) = -(sqrt(2)*k + m), so positivity flips the sign
    CHECK(ord.is_positive(r) == (s < 0));
  }
}

TEST_CASE("indecomposables filter exactly the pairwise sums") {
  for (int box = 1; box <= 4; ++box) {
    const SplitRoots s =
        split_positive(enumerate_roots22(box), OrderingFunctional::lex());
    const CandidateBasis basis = indecomposables(s.positives, box);
    CHECK(basis.search_box == box);
    CHECK(std::is_sorted(basis.candidates.begin(), basis.candidates.end()));

    std::set<Vec22> pool(s.positives.begin(), s.positives.end());
    std::set<Vec22> expect = pool;
    for (const auto& x : s.positives)
      for (const auto& y : s.positives) expect.erase(x + y);
    CHECK(basis.candidates ==
          std::vector<Vec22>(expect.begin(), expect.end()));

    // gram matrix really is the pairwise inner products
    REQUIRE(basis.gram.size() == basis.candidates.size());
    for (std::size_t i = 0; i < basis.candidates.size(); ++i)
      for (std::size_t j = 0; j < basis.candidates.size(); ++j)
        CHECK(basis.gram[i][j] == inner22(basis.candidates[i], basis.candidates[j]));
  }
}

TEST_CASE("generation check covers the box when candidates come from it") {
  for (int box = 1; box <= 3; ++box) {
    const SplitRoots s =
        split_positive(enumerate_roots22(box), OrderingFunctional::lex());
    const CandidateBasis basis = indecomposables(s.positives, box);
    const GenerationReport report = generation_check(basis, box);
    CHECK(report.box == box);
    CHECK(report.checked_count == s.positives.size());
    CHECK(report.unreachable.empty());
  }
}

TEST_CASE("generation check flags roots no candidate combo reaches") {
  // candidates from box 1 cannot span everything inside box 3
  const SplitRoots s1 =
      split_positive(enumerate_roots22(1), OrderingFunctional::lex());
  const CandidateBasis small = indecomposables(s1.positives, 1);
  const GenerationReport report = generation_check(small, 3);
  CHECK(report.box == 3);
  const SplitRoots s3 =
      split_positive(enumerate_roots22(3), OrderingFunctional::lex());
  CHECK(report.checked_count == s3.positives.size());
  for (const auto& v : report.unreachable) {
    CHECK(is_root22(v));
    CHECK(lex_positive(v));
  }
  // independent cross-check: no combination with coefficient total <= 10
  // hits an unreachable target (exhaustive over all such combinations)
  const auto& cs = small.candidates;
  std::set<Vec22> sums;
  auto expand = [&](auto&& self, std::size_t i, int left, const Vec22& acc) -> void {
    if (i == cs.size()) {
      sums.insert(acc);
      return;
    }
    Vec22 cur = acc;
    for (int c = 0; c <= left; ++c) {
      self(self, i + 1, left - c, cur);
      cur = cur + cs[i];
    }
  };
  expand(expand, 0, 10, Vec22(0, 0, 0, 0));
  for (const auto& v : report.unreachable) CHECK(sums.count(v) == 0);
  // and everything reported reachable in the box really is a known sum
  for (const auto& v : s3.positives)
    if (sums.count(v) != 0)
      CHECK(std::find(report.unreachable.begin(), report.unreachable.end(), v) ==
            report.unreachable.end());
}

TEST_CASE("cartan conditions") {
  using C = CartanCondition;
  CHECK(cartan_check({{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}}).empty());
  CHECK(cartan_check({{Rat(0), Rat(-3)}, {Rat(-3), Rat(-2)}}).empty());

  auto v = cartan_check({{Rat(2), Rat(1)}, {Rat(1), Rat(2)}});
  REQUIRE(v.size() == 1);
  CHECK(v[0] == CartanViolation{C::OffDiagonalSign, 1, 2});

  v = cartan_check({{Rat(2), Rat(-1)}, {Rat(0), Rat(2)}});
  REQUIRE(!v.empty());
  CHECK(v[0] == CartanViolation{C::Symmetry, 1, 2});

  v = cartan_check({{Rat(2), Rat(-1)}, {Rat(-1), Rat(3, 2)}});
  REQUIRE(v.size() == 1);
  CHECK(v[0] == CartanViolation{C::Integrality, 2, 1});

  CHECK(std::string(cartan_condition_name(C::Symmetry)) == "a_ij = a_ji");
  CHECK(std::string(cartan_condition_name(C::OffDiagonalSign)) ==
        "a_ij <= 0 if i != j");
  CHECK(std::string(cartan_condition_name(C::Integrality)) ==
        "2a_ij/a_ii in Z if a_ii > 0");

  CHECK_THROWS_AS(cartan_check({{Rat(2), Rat(1)}}), std::invalid_argument);
  CHECK(cartan_check({}).empty());
}

TEST_CASE("candidate gram matrices show positive off-diagonal entries") {
  // the box-2 candidates already violate the sign condition, which is the
  // point of collecting them as evidence
  const SplitRoots s = split_positive(enumerate_roots22(2), OrderingFunctional::lex());
  const CandidateBasis basis = indecomposables(s.positives, 2);
  std::vector<std::vector<Rat>> m(basis.gram.size());
  for (std::size_t i = 0; i < basis.gram.size(); ++i)
    for (const Int& x : basis.gram[i]) m[i].emplace_back(x);
  const auto violations = cartan_check(m);
  bool sign_violation = false;
  for (const auto& v : violations)
    sign_violation = sign_violation || v.condition == CartanCondition::OffDiagonalSign;
  CHECK(sign_violation);
}
