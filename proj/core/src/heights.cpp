#include "latlab/heights.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "latlab/weyl_refuter.hpp"

namespace latlab {

namespace {

// Sum of w_i * x_i with total interval width <= precision.
RatInterval combo(const std::array<const CertifiedReal*, 4>& xs,
                  const std::array<Int, 4>& ws, const Rat& precision) {
  RatInterval acc = RatInterval::point(Rat(0));
  for (std::size_t i = 0; i < 4; ++i) {
    if (ws[i] == 0) continue;
    const Rat scale = std::max(Rat(abs(ws[i])), Rat(1));
    const RatInterval part = xs[i]->enclosure(precision / (4 * scale));
    acc = acc + part.scaled(Rat(ws[i]));
  }
  return acc;
}

Rat exact_rat(const CertifiedReal& x) { return x.rational_value(); }

HeightOutcome exact_zero_outcome(const HeightFunctional& h) {
  // Clear denominators: h is then inner22(rho, .) up to a positive factor.
  const Rat a = exact_rat(h.a), b = exact_rat(h.b), c = exact_rat(h.c), d = exact_rat(h.d);
  if (a == 0 && b == 0 && c == 0 && d == 0)
    throw std::invalid_argument("zero height functional");
  Int lcm = 1;
  for (const Rat* v : {&a, &b, &c, &d}) {
    const Int den(boost::multiprecision::denominator(*v));
    lcm = lcm / gcd_abs(lcm, den) * den;
  }
  auto scaled = [&](const Rat& v) {
    return Int(boost::multiprecision::numerator(v)) *
           (lcm / Int(boost::multiprecision::denominator(v)));
  };
  const Vec22 rho(scaled(a), scaled(b), scaled(c), scaled(d));
  const OrthogonalityCertificate cert = orthogonal_root(rho);
  return {HeightOutcome::Kind::ExactZero, cert.alpha, Rat(0)};
}

struct SchemeCoeffs {
  const CertifiedReal* a;
  const CertifiedReal* b;
  const CertifiedReal* c;
  const CertifiedReal* d;
  bool cone_swapped;
};

HeightOutcome run_scheme(const SchemeCoeffs& co, const Rat& epsilon, int budget) {
  const Rat floor_precision = epsilon * inv_pow2(240);
  for (int step = 0; step < budget; ++step) {
    const std::size_t depth = static_cast<std::size_t>(step) + 1;
    const ConvergentSeq cb = convergents(*co.b, depth);
    const ConvergentSeq cd = convergents(*co.d, depth);
    if (cb.values.empty() || cd.values.empty()) continue;
    const Rat& pb = cb.values.back();
    const Rat& pd = cd.values.back();
    Int l = Int(boost::multiprecision::denominator(pd)) *
            Int(boost::multiprecision::numerator(pb));
    Int n = Int(boost::multiprecision::denominator(pb)) *
            Int(boost::multiprecision::numerator(pd));
    if (l == 0 && n == 0) continue;
    const Int g = gcd_abs(l, n);
    if (g > 1) { l /= g; n /= g; }
    const RootFamily fam = family_for(l, n);

    // h on the family is M*t + N; certify a t making it small but nonzero.
    for (Rat prec = epsilon / 8;; prec /= 64) {
      const RatInterval mi =
          combo({co.d, co.b, co.a, co.c}, {l, -n, Int(0), Int(0)}, prec);
      if (mi.is_point() && mi.lo == 0) break;  // family is degenerate
      if (!mi.contains_zero()) {
        const RatInterval ni =
            combo({co.a, co.b, co.c, co.d}, {-fam.l, -fam.k0, -fam.n, -fam.m0}, prec);
        const Int t = round_rat(-ni.midpoint() / mi.midpoint());
        const RatInterval vi = mi.scaled(Rat(t)) + ni;
        if (!vi.contains_zero() && vi.abs_upper() < epsilon) {
          Vec22 alpha = family_member(fam, t);
          if (!is_root22(alpha)) throw std::logic_error("family member lost the root condition");
          if (co.cone_swapped) alpha = alpha.cone_swapped();
          const Rat bound = (vi.abs_upper() + epsilon) / 2;
          return {HeightOutcome::Kind::SmallNonzero, alpha, bound};
        }
      }
      if (prec <= floor_precision) break;
    }
  }
  throw Inconclusive(budget);
}

}  // namespace

RatInterval height(const HeightFunctional& h, const Vec22& v, const Rat& precision) {
  if (precision <= 0) throw std::invalid_argument("precision must be positive");
  return combo({&h.a, &h.b, &h.c, &h.d}, {-v.l, -v.k, -v.n, -v.m}, precision);
}

HeightOutcome small_height_root(const HeightFunctional& h, const Rat& epsilon,
                                int budget) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  if (h.all_rational()) return exact_zero_outcome(h);

  SchemeCoeffs co{&h.a, &h.b, &h.c, &h.d, false};
  if (h.b.is_rational() && h.d.is_rational()) {
    // b, d rational but a or c not: h((l,k;n,m)) has coefficients
    // (b, a, d, c), which puts the irrational slots where the scheme
    // needs them.
    co = SchemeCoeffs{&h.b, &h.a, &h.d, &h.c, true};
  }
  return run_scheme(co, epsilon, budget);
}

}  // namespace latlab
