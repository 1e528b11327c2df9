#include "latlab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace latlab {

bool LatticeVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Int& c) { return c == 0; });
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r;
  r.coords.reserve(coords.size());
  for (const Int& c : coords) r.coords.push_back(-c);
  return r;
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  if (size() != o.size()) throw DimensionMismatch("vector sizes differ");
  LatticeVector r;
  r.coords.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords.push_back(coords[i] + o.coords[i]);
  return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  if (size() != o.size()) throw DimensionMismatch("vector sizes differ");
  LatticeVector r;
  r.coords.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords.push_back(coords[i] - o.coords[i]);
  return r;
}

GramLattice GramLattice::standard(StandardLattice kind) {
  if (kind == StandardLattice::II11) {
    return GramLattice(2, {Int(0), Int(-1), Int(-1), Int(0)});
  }
  // Rank-8 positive definite even unimodular lattice in its simple-root
  // basis: diagonal 2, entry -1 exactly on the Dynkin-diagram edges.
  static const int edges[7][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5},
                                  {5, 6}, {6, 7}, {1, 3}};
  std::vector<Int> g(64, Int(0));
  for (int i = 0; i < 8; ++i) g[i * 8 + i] = 2;
  for (auto& e : edges) {
    g[e[0] * 8 + e[1]] = -1;
    g[e[1] * 8 + e[0]] = -1;
  }
  return GramLattice(8, std::move(g));
}

GramLattice GramLattice::gamma(int p, int q) {
  if (p < q || q < 0 || p + q < 1)
    throw std::invalid_argument("gamma(p, q) needs p >= q >= 0 and p + q >= 1");
  if ((p - q) % 8 != 0)
    throw NotEvenSelfDual("no even self-dual lattice of signature (" +
                          std::to_string(p) + ", " + std::to_string(q) +
                          "): p - q must be divisible by 8");
  const int planes = q;
  const int octets = (p - q) / 8;
  GramLattice result(0, {});
  for (int i = 0; i < planes; ++i)
    result = result.rank_ == 0 ? standard(StandardLattice::II11)
                               : result.direct_sum(standard(StandardLattice::II11));
  for (int i = 0; i < octets; ++i)
    result = result.rank_ == 0 ? standard(StandardLattice::E8)
                               : result.direct_sum(standard(StandardLattice::E8));
  return result;
}

GramLattice GramLattice::from_gram(const std::vector<std::vector<Int>>& g) {
  const std::size_t n = g.size();
  if (n == 0) throw std::invalid_argument("empty gram matrix");
  std::vector<Int> packed;
  packed.reserve(n * n);
  for (const auto& row : g) {
    if (row.size() != n) throw std::invalid_argument("gram matrix not square");
    for (const Int& v : row) packed.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (packed[i * n + j] != packed[j * n + i])
        throw std::invalid_argument("gram matrix not symmetric");
  return GramLattice(static_cast<int>(n), std::move(packed));
}

GramLattice GramLattice::direct_sum(const GramLattice& other) const {
  const int n = rank_ + other.rank_;
  std::vector<Int> g(static_cast<std::size_t>(n) * n, Int(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      g[static_cast<std::size_t>(i) * n + j] = gram(i, j);
  for (int i = 0; i < other.rank_; ++i)
    for (int j = 0; j < other.rank_; ++j)
      g[static_cast<std::size_t>(rank_ + i) * n + (rank_ + j)] = other.gram(i, j);
  return GramLattice(n, std::move(g));
}

std::vector<std::vector<Int>> GramLattice::gram_rows() const {
  std::vector<std::vector<Int>> rows(rank_);
  for (int i = 0; i < rank_; ++i) {
    rows[i].reserve(rank_);
    for (int j = 0; j < rank_; ++j) rows[i].push_back(gram(i, j));
  }
  return rows;
}

Int GramLattice::inner(const LatticeVector& x, const LatticeVector& y) const {
  if (static_cast<int>(x.size()) != rank_ || static_cast<int>(y.size()) != rank_)
    throw DimensionMismatch("vector size does not match lattice rank");
  Int acc = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (int j = 0; j < rank_; ++j) row += gram(i, j) * y[j];
    acc += x[i] * row;
  }
  return acc;
}

// Fraction-free symmetric elimination (Bareiss). Keeps the trailing block
// equal to D_k times the exact Schur complement, so every division is exact
// and the pivot signs give the inertia. Basis changes used to secure a pivot
// are congruences, which leave |det| and the signature unchanged.
LatticeClass GramLattice::classify() const {
  const int n = rank_;
  std::vector<Int> w(gram_);
  auto at = [&](int i, int j) -> Int& { return w[static_cast<std::size_t>(i) * n + j]; };

  bool even = true;
  for (int i = 0; i < n; ++i)
    if (gram(i, i) % 2 != 0) even = false;

  auto swap_rc = [&](int a, int b) {
    for (int j = 0; j < n; ++j) std::swap(at(a, j), at(b, j));
    for (int i = 0; i < n; ++i) std::swap(at(i, a), at(i, b));
  };
  auto add_rc = [&](int dst, int src) {  // basis change e_dst += e_src
    for (int j = 0; j < n; ++j) at(dst, j) += at(src, j);
    for (int i = 0; i < n; ++i) at(i, dst) += at(i, src);
  };

  Int prev = 1;
  int pos = 0, neg = 0;
  for (int k = 0; k < n; ++k) {
    if (at(k, k) == 0) {
      int dj = -1;
      for (int j = k + 1; j < n && dj < 0; ++j)
        if (at(j, j) != 0) dj = j;
      if (dj >= 0) {
        swap_rc(k, dj);
      } else {
        int oi = -1, oj = -1;
        for (int i = k; i < n && oi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (at(i, j) != 0) { oi = i; oj = j; break; }
        if (oi < 0) throw DegenerateForm("gram matrix is singular");
        add_rc(oi, oj);  // diagonal entry becomes 2 * w[oi][oj] != 0
        if (oi != k) swap_rc(k, oi);
      }
    }
    const Int pivot = at(k, k);
    if ((pivot > 0) == (prev > 0)) ++pos; else ++neg;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * pivot - at(i, k) * at(k, j)) / prev;
    prev = pivot;
  }

  LatticeClass c;
  c.is_even = even;
  c.abs_det = abs(prev);
  c.signature = {pos, neg};
  return c;
}

namespace {

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool sqrt_exact(const std::int64_t& n, std::int64_t& out) {
  if (n < 0) return false;
  std::int64_t s = isqrt64(n);
  if (s * s != n) return false;
  out = s;
  return true;
}

bool sqrt_exact(const Int& n, Int& out) {
  if (n < 0) return false;
  Int s = isqrt_floor(n);
  if (s * s != n) return false;
  out = s;
  return true;
}

// Depth-first walk over coordinates with incremental partial norms. At the
// last coordinate the quadratic a*y^2 + b*y + c == target is solved exactly
// instead of scanned.
template <typename S>
void enumerate_with(const std::vector<S>& g, int n, const S& target, int box,
                    std::vector<LatticeVector>& out) {
  std::vector<S> x(n, S(0));
  // colsum[j] = sum_{i < depth} g[i][j] * x[i]
  std::vector<S> colsum(n, S(0));
  auto gm = [&](int i, int j) -> const S& { return g[static_cast<std::size_t>(i) * n + j]; };

  std::vector<S> roots;
  auto emit = [&](const std::vector<S>& coords) {
    LatticeVector v;
    v.coords.reserve(n);
    for (const S& c : coords) v.coords.emplace_back(c);
    out.push_back(std::move(v));
  };

  auto self = [&](auto&& rec, int depth, const S& partial, bool all_zero) -> void {
    if (depth == n - 1) {
      const S a = gm(depth, depth);
      const S b = 2 * colsum[depth];
      const S c = partial - target;
      roots.clear();
      if (a == 0) {
        if (b == 0) {
          if (c == 0)
            for (S y = S(-box); y <= S(box); ++y) roots.push_back(y);
        } else if ((-c) % b == 0) {
          roots.push_back(-c / b);
        }
      } else {
        const S disc = b * b - 4 * a * c;
        S s;
        if (sqrt_exact(disc, s)) {
          for (int sign = 0; sign < (disc == 0 ? 1 : 2); ++sign) {
            const S num = -b + (sign == 0 ? -s : s);
            if (num % (2 * a) == 0) roots.push_back(num / (2 * a));
          }
        }
      }
      std::sort(roots.begin(), roots.end());
      for (const S& y : roots) {
        if (y < S(-box) || y > S(box)) continue;
        if (all_zero && y == 0) continue;
        x[depth] = y;
        emit(x);
      }
      return;
    }
    for (S v = S(-box); v <= S(box); ++v) {
      x[depth] = v;
      const S next_partial = partial + gm(depth, depth) * v * v + 2 * v * colsum[depth];
      for (int j = depth + 1; j < n; ++j) colsum[j] += gm(depth, j) * v;
      rec(rec, depth + 1, next_partial, all_zero && v == 0);
      for (int j = depth + 1; j < n; ++j) colsum[j] -= gm(depth, j) * v;
    }
  };

  self(self, 0, S(0), true);
}

}  // namespace

std::vector<LatticeVector> GramLattice::enumerate_norm(const Int& target, int box) const {
  if (box < 0) throw std::invalid_argument("box must be >= 0");
  std::vector<LatticeVector> out;
  if (box == 0) return out;

  // int64 engine is safe when every partial value stays far from overflow.
  Int scale = abs(target);
  for (const Int& v : gram_) scale += abs(v) * box * box;
  if (fits_int64(scale) && scale < (Int(1) << 30)) {
    std::vector<std::int64_t> g;
    g.reserve(gram_.size());
    for (const Int& v : gram_) g.push_back(v.convert_to<std::int64_t>());
    enumerate_with<std::int64_t>(g, rank_, target.convert_to<std::int64_t>(), box, out);
  } else {
    enumerate_with<Int>(gram_, rank_, target, box, out);
  }
  return out;
}

}  // namespace latlab
