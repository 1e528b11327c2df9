#pragma once

#include <tuple>
#include <vector>

#include "latlab/errors.hpp"
#include "latlab/lattice.hpp"
#include "latlab/numeric.hpp"

namespace latlab {

// Point of the signature (2,2) even self-dual lattice in double light-cone
// coordinates (k, l; m, n); the quadratic form is -2kl - 2mn.
struct Vec22 {
  Int k, l, m, n;

  Vec22() : k(0), l(0), m(0), n(0) {}
  Vec22(Int k_, Int l_, Int m_, Int n_)
      : k(std::move(k_)), l(std::move(l_)), m(std::move(m_)), n(std::move(n_)) {}
  Vec22(long long k_, long long l_, long long m_, long long n_)
      : k(k_), l(l_), m(m_), n(n_) {}

  bool is_zero() const { return k == 0 && l == 0 && m == 0 && n == 0; }
  Vec22 operator-() const { return Vec22(-k, -l, -m, -n); }
  Vec22 operator+(const Vec22& o) const { return Vec22(k + o.k, l + o.l, m + o.m, n + o.n); }
  Vec22 operator-(const Vec22& o) const { return Vec22(k - o.k, l - o.l, m - o.m, n - o.n); }

  // Exchange the two hyperbolic planes: (k,l;m,n) -> (m,n;k,l).
  Vec22 block_swapped() const { return Vec22(m, n, k, l); }
  // Exchange the light-cone directions inside each plane: (k,l;m,n) -> (l,k;n,m).
  Vec22 cone_swapped() const { return Vec22(l, k, n, m); }

  friend bool operator==(const Vec22& a, const Vec22& b) = default;
  friend bool operator<(const Vec22& a, const Vec22& b) {
    return std::tie(a.k, a.l, a.m, a.n) < std::tie(b.k, b.l, b.m, b.n);
  }
};

Int inner22(const Vec22& u, const Vec22& v);
inline Int norm22(const Vec22& v) { return inner22(v, v); }
// Norm 2, i.e. kl + mn == -1.
bool is_root22(const Vec22& v);

// Row-major 2x2 integer matrix [[a, b], [c, d]].
struct Mat2 {
  Int a, b, c, d;

  Mat2() : a(0), b(0), c(0), d(0) {}
  Mat2(Int a_, Int b_, Int c_, Int d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
  Mat2(long long a_, long long b_, long long c_, long long d_)
      : a(a_), b(b_), c(c_), d(d_) {}

  static Mat2 identity() { return Mat2(1, 0, 0, 1); }
  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }
  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  Mat2 operator*(const Mat2& o) const {
    return Mat2(a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d);
  }
  Mat2 operator-() const { return Mat2(-a, -b, -c, -d); }
  friend bool operator==(const Mat2& x, const Mat2& y) = default;
};

// Determinant +1, enforced at construction.
class UnimodularMat2 {
 public:
  explicit UnimodularMat2(Mat2 m) : m_(std::move(m)) {
    if (m_.det() != 1) throw NotUnimodular("matrix determinant is not 1");
  }
  UnimodularMat2(long long a, long long b, long long c, long long d)
      : UnimodularMat2(Mat2(a, b, c, d)) {}
  static UnimodularMat2 identity() { return UnimodularMat2(Mat2::identity()); }

  const Mat2& mat() const { return m_; }
  UnimodularMat2 operator*(const UnimodularMat2& o) const {
    return UnimodularMat2(m_ * o.m_);
  }
  friend bool operator==(const UnimodularMat2& x, const UnimodularMat2& y) = default;

 private:
  Mat2 m_;
};

// Root (k,l;m,n) <-> [[-k, m], [n, l]]; a bijection between norm-2 vectors
// and determinant-1 integer matrices.
UnimodularMat2 to_sl2(const Vec22& root);
Vec22 from_sl2(const UnimodularMat2& m);
Vec22 from_sl2(const Mat2& m);  // validates det == 1

// All roots with max(|k|,|l|,|m|,|n|) <= box, lexicographic in (k,l,m,n).
std::vector<Vec22> enumerate_roots22(int box);

// One-parameter family of roots orthogonal to a fixed direction:
// t -> (k0 + t*n, l; m0 - t*l, n).
struct RootFamily {
  Int l, n, k0, m0;
  friend bool operator==(const RootFamily& a, const RootFamily& b) = default;
};

// Solves k*l + m*n == -1 for the base point (k0, m0); requires gcd(l, n) == 1.
RootFamily family_for(const Int& l, const Int& n);
Vec22 family_member(const RootFamily& f, const Int& t);

// The same lattice as a GramLattice over the (k, l, m, n) basis.
GramLattice gamma22_lattice();
LatticeVector to_lattice_vector(const Vec22& v);
Vec22 vec22_from(const LatticeVector& v);

}  // namespace latlab
