#include "latlab/gamma22.hpp"

#include <future>
#include <string>

namespace latlab {

namespace {

std::string show(const Vec22& v) {
  return "(" + v.k.str() + "," + v.l.str() + ";" + v.m.str() + "," + v.n.str() + ")";
}

}  // namespace

Int inner22(const Vec22& u, const Vec22& v) {
  return -(u.k * v.l + u.l * v.k + u.m * v.n + u.n * v.m);
}

bool is_root22(const Vec22& v) { return v.k * v.l + v.m * v.n == -1; }

UnimodularMat2 to_sl2(const Vec22& root) {
  if (!is_root22(root)) throw NotARoot("not a norm-2 vector: " + show(root));
  // det = -kl - mn = 1 exactly by the root condition.
  return UnimodularMat2(Mat2(-root.k, root.m, root.n, root.l));
}

Vec22 from_sl2(const UnimodularMat2& m) {
  const Mat2& r = m.mat();
  return Vec22(-r.a, r.d, r.b, r.c);
}

Vec22 from_sl2(const Mat2& m) { return from_sl2(UnimodularMat2(m)); }

namespace {

// Roots with fixed k, all coordinates within [-box, box], lex order.
void roots_for_k(long long k, long long box, std::vector<Vec22>& out) {
  for (long long l = -box; l <= box; ++l) {
    const long long target = -1 - k * l;  // need m*n == target
    for (long long m = -box; m <= box; ++m) {
      if (m == 0) {
        if (target != 0) continue;
        for (long long n = -box; n <= box; ++n) out.emplace_back(k, l, m, n);
      } else {
        if (target % m != 0) continue;
        const long long n = target / m;
        if (n < -box || n > box) continue;
        out.emplace_back(k, l, m, n);
      }
    }
  }
}

}  // namespace

std::vector<Vec22> enumerate_roots22(int box) {
  std::vector<Vec22> out;
  if (box <= 0) return out;
  const long long b = box;

  unsigned workers = worker_limit();
  if (box < 16 || workers < 2) {
    for (long long k = -b; k <= b; ++k) roots_for_k(k, b, out);
    return out;
  }

  const long long total = 2 * b + 1;
  if (workers > static_cast<unsigned>(total)) workers = static_cast<unsigned>(total);
  std::vector<std::future<std::vector<Vec22>>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    const long long lo = -b + static_cast<long long>(total * w / workers);
    const long long hi = -b + static_cast<long long>(total * (w + 1) / workers);
    jobs.push_back(std::async(std::launch::async, [lo, hi, b]() {
      std::vector<Vec22> part;
      for (long long k = lo; k < hi; ++k) roots_for_k(k, b, part);
      return part;
    }));
  }
  for (auto& j : jobs) {
    auto part = j.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

RootFamily family_for(const Int& l, const Int& n) {
  if (l == 0 && n == 0) throw std::invalid_argument("family_for(0, 0)");
  const ExtGcd e = ext_gcd(l, n);
  if (e.g != 1)
    throw NotCoprime("gcd(" + l.str() + ", " + n.str() + ") = " + e.g.str());
  // l*x + n*y = 1, so k0 = -x, m0 = -y solves k0*l + m0*n = -1.
  RootFamily f;
  f.l = l;
  f.n = n;
  f.k0 = -e.x;
  f.m0 = -e.y;
  // Canonical base point: m0 in [0, |l|) when l != 0; for l == 0 the
  // parameter only moves k0, which we pin to 0.
  if (l != 0) {
    const Int m0 = floor_mod(f.m0, abs(l));
    const Int t = (f.m0 - m0) / l;
    f.k0 += t * n;
    f.m0 = m0;
  } else {
    f.k0 = 0;
  }
  return f;
}

Vec22 family_member(const RootFamily& f, const Int& t) {
  return Vec22(f.k0 + t * f.n, f.l, f.m0 - t * f.l, f.n);
}

GramLattice gamma22_lattice() {
  return GramLattice::standard(StandardLattice::II11)
      .direct_sum(GramLattice::standard(StandardLattice::II11));
}

LatticeVector to_lattice_vector(const Vec22& v) {
  LatticeVector r;
  r.coords = {v.k, v.l, v.m, v.n};
  return r;
}

Vec22 vec22_from(const LatticeVector& v) {
  if (v.size() != 4) throw DimensionMismatch("need 4 coordinates");
  return Vec22(v[0], v[1], v[2], v[3]);
}

}  // namespace latlab
