#include "latlab/certified_real.hpp"

#include <stdexcept>
#include <utility>

namespace latlab {

namespace {

// Strips square factors: d = s^2 * core with core square-free; multiplies
// the carried coefficient by s.
Int squarefree_core(Int d, Rat& coeff) {
  for (Int p = 2; p * p <= d; ++p) {
    const Int pp = p * p;
    while (d % pp == 0) {
      d /= pp;
      coeff *= Rat(p);
    }
  }
  return d;
}

}  // namespace

CertifiedReal CertifiedReal::rational(Rat v) {
  CertifiedReal r;
  r.rep_ = std::move(v);
  return r;
}

CertifiedReal CertifiedReal::quadratic(const Rat& a, const Rat& b, const Int& d) {
  if (d < 0) throw std::invalid_argument("quadratic part needs d >= 0");
  if (b == 0 || d == 0) return rational(a);
  Rat coeff = b;
  const Int core = squarefree_core(d, coeff);
  if (core == 1) return rational(a + coeff);
  CertifiedReal r;
  r.rep_ = Quad{a, coeff, core};
  return r;
}

CertifiedReal CertifiedReal::continued_fraction(CoeffFn coeffs) {
  if (!coeffs) throw std::invalid_argument("null coefficient stream");
  CertifiedReal r;
  r.rep_ = std::move(coeffs);
  return r;
}

bool CertifiedReal::is_rational() const {
  return std::holds_alternative<Rat>(rep_);
}

const Rat& CertifiedReal::rational_value() const {
  if (!is_rational()) throw std::logic_error("not represented as a rational");
  return std::get<Rat>(rep_);
}

namespace {

// [s/2^t, (s+1)/2^t] with s = floor(sqrt(d * 4^t)) encloses sqrt(d); the
// enclosures are nested in t and of width 2^-t.
RatInterval sqrt_enclosure(const Int& d, unsigned t) {
  const Int scaled = d << (2 * t);
  const Int s = isqrt_floor(scaled);
  const Int den = pow2_int(t);
  return RatInterval(Rat(s, den), Rat(s + 1, den));
}

}  // namespace

RatInterval CertifiedReal::enclosure(const Rat& precision) const {
  if (precision <= 0) throw std::invalid_argument("precision must be positive");
  if (const Rat* v = std::get_if<Rat>(&rep_)) return RatInterval::point(*v);

  if (const Quad* q = std::get_if<Quad>(&rep_)) {
    const Rat babs = abs(q->b);
    unsigned t = 0;
    while (babs > precision * pow2_int(t)) ++t;  // |b| * 2^-t <= precision
    const RatInterval root = sqrt_enclosure(q->d, t);
    const RatInterval scaled = root.scaled(q->b);
    return RatInterval(q->a + scaled.lo, q->a + scaled.hi);
  }

  // Continued fraction: consecutive convergents bracket the value and the
  // brackets are nested.
  CoeffStream stream = cf_stream();
  Int p_prev = 1, q_prev = 0;  // virtual index -1
  Int p_cur, q_cur;
  bool have_first = false;
  Rat last;
  for (;;) {
    std::optional<Int> a = stream.next();
    if (!a) {
      // Expansion ended: the value is exactly the last convergent.
      if (!have_first) throw std::invalid_argument("empty coefficient stream");
      return RatInterval::point(last);
    }
    if (!have_first) {
      p_cur = *a;
      q_cur = 1;
      have_first = true;
      last = Rat(p_cur, q_cur);
      continue;
    }
    const Int p_next = *a * p_cur + p_prev;
    const Int q_next = *a * q_cur + q_prev;
    p_prev = p_cur; q_prev = q_cur;
    p_cur = p_next; q_cur = q_next;
    const Rat now(p_cur, q_cur);
    const RatInterval bracket = last <= now ? RatInterval(last, now) : RatInterval(now, last);
    if (bracket.width() <= precision) return bracket;
    last = now;
  }
}

CertifiedReal::CoeffStream CertifiedReal::cf_stream() const {
  CoeffStream s;
  if (const Rat* v = std::get_if<Rat>(&rep_)) {
    CoeffStream::RatState st;
    Int num(boost::multiprecision::numerator(*v));
    Int den(boost::multiprecision::denominator(*v));
    while (den != 0) {
      const Int a = floor_div(num, den);
      st.coeffs.push_back(a);
      const Int r = num - a * den;
      num = den;
      den = r;
    }
    s.state_ = std::move(st);
  } else if (const Quad* q = std::get_if<Quad>(&rep_)) {
    // Represent the value as (p + sqrt(num)) / q with q | num - p^2, then run
    // the classical surd recurrence.
    const Int an(boost::multiprecision::numerator(q->a));
    const Int ad(boost::multiprecision::denominator(q->a));
    const Int bn(boost::multiprecision::numerator(q->b));
    const Int bd(boost::multiprecision::denominator(q->b));
    Int p = an * bd;
    Int den = ad * bd;
    Int c = bn * ad;
    if (c < 0) { p = -p; den = -den; c = -c; }
    Int num = c * c * q->d;
    if ((num - p * p) % den != 0) {
      const Int f = abs(den);
      p *= f;
      num *= f * f;
      den *= f;
    }
    CoeffStream::QuadState st;
    st.p = p;
    st.q = den;
    st.num = num;
    s.state_ = std::move(st);
  } else {
    CoeffStream::FnState st;
    st.fn = std::get<CoeffFn>(rep_);
    s.state_ = std::move(st);
  }
  return s;
}

std::optional<Int> CertifiedReal::CoeffStream::next() {
  if (auto* st = std::get_if<RatState>(&state_)) {
    if (st->pos >= st->coeffs.size()) return std::nullopt;
    return st->coeffs[st->pos++];
  }
  if (auto* st = std::get_if<QuadState>(&state_)) {
    const Int s = isqrt_floor(st->num);
    Int a;
    if (st->q > 0) a = floor_div(st->p + s, st->q);
    else a = -(floor_div(st->p + s, -st->q) + 1);
    const Int p_next = a * st->q - st->p;
    st->q = (st->num - p_next * p_next) / st->q;
    st->p = p_next;
    return a;
  }
  auto* st = std::get_if<FnState>(&state_);
  if (st == nullptr) return std::nullopt;  // unassigned stream
  if (st->done) return std::nullopt;
  std::optional<Int> a = st->fn(st->pos);
  if (!a) {
    st->done = true;
    return std::nullopt;
  }
  if (st->pos > 0 && *a < 1)
    throw std::invalid_argument("continued-fraction coefficients must be >= 1 past index 0");
  ++st->pos;
  return a;
}

ConvergentSeq convergents(const CertifiedReal& x, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  ConvergentSeq out;
  CertifiedReal::CoeffStream stream = x.cf_stream();
  Int p_prev = 1, q_prev = 0;
  Int p_cur = 0, q_cur = 1;
  bool have_first = false;
  while (out.values.size() < depth) {
    std::optional<Int> a = stream.next();
    if (!a) {
      out.terminated_early = true;
      break;
    }
    if (!have_first) {
      p_cur = *a;
      q_cur = 1;
      have_first = true;
    } else {
      const Int p_next = *a * p_cur + p_prev;
      const Int q_next = *a * q_cur + q_prev;
      p_prev = p_cur; q_prev = q_cur;
      p_cur = p_next; q_cur = q_next;
    }
    out.values.emplace_back(p_cur, q_cur);
  }
  return out;
}

}  // namespace latlab
