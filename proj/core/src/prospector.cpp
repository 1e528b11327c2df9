#include "latlab/prospector.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace latlab {

bool lex_positive(const Vec22& v) {
  for (const Int* c : {&v.k, &v.l, &v.m, &v.n}) {
    if (*c > 0) return true;
    if (*c < 0) return false;
  }
  return false;
}

OrderingFunctional OrderingFunctional::lex() {
  OrderingFunctional o;
  o.kind_ = Lex{};
  return o;
}

OrderingFunctional OrderingFunctional::linear(Vec22 rho) {
  OrderingFunctional o;
  o.kind_ = Linear{std::move(rho)};
  return o;
}

OrderingFunctional OrderingFunctional::linear_real(HeightFunctional h) {
  OrderingFunctional o;
  o.kind_ = LinearReal{std::move(h)};
  return o;
}

bool OrderingFunctional::is_positive(const Vec22& v) const {
  if (std::holds_alternative<Lex>(kind_)) {
    if (v.is_zero()) throw std::invalid_argument("zero vector has no lex sign");
    return lex_positive(v);
  }
  if (const Linear* lin = std::get_if<Linear>(&kind_)) {
    const Int val = inner22(lin->rho, v);
    if (val == 0) throw ZeroOnRoot(v);
    return val > 0;
  }
  const LinearReal& lr = std::get<LinearReal>(kind_);
  Rat prec = 1;
  for (int round = 0; round < 48; ++round) {
    const RatInterval iv = height(lr.h, v, prec);
    if (iv.strictly_positive()) return true;
    if (iv.strictly_negative()) return false;
    if (iv.is_point()) break;  // exactly zero
    prec /= 256;
  }
  throw ZeroOnRoot(v);
}

SplitRoots split_positive(const std::vector<Vec22>& roots,
                          const OrderingFunctional& ord) {
  SplitRoots out;
  for (const Vec22& r : roots) {
    if (ord.is_positive(r)) out.positives.push_back(r);
    else out.negatives.push_back(r);
  }
  return out;
}

CandidateBasis indecomposables(const std::vector<Vec22>& positives, int box) {
  if (box < 1) throw std::invalid_argument("box must be positive");
  std::set<Vec22> pool;
  for (const Vec22& v : positives) {
    if (!is_root22(v)) throw std::invalid_argument("input contains a non-root");
    if (!lex_positive(v)) throw std::invalid_argument("input contains a non-positive vector");
    for (const Int* c : {&v.k, &v.l, &v.m, &v.n})
      if (*c < -box || *c > box) throw std::invalid_argument("input leaves the box");
    pool.insert(v);
  }

  CandidateBasis basis;
  basis.search_box = box;
  for (const Vec22& v : pool) {
    bool decomposable = false;
    for (const Vec22& beta : pool) {
      if (!(beta < v)) break;  // beta and v - beta are both lex below v
      if (pool.count(v - beta)) { decomposable = true; break; }
    }
    if (!decomposable) basis.candidates.push_back(v);
  }

  const std::size_t n = basis.candidates.size();
  basis.gram.assign(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      basis.gram[i][j] = inner22(basis.candidates[i], basis.candidates[j]);
  return basis;
}

namespace {

// Exact two-phase simplex (Bland's rule) maximizing sum x_j subject to
// cols * x = target, x >= 0. Used as a coefficient-sum cap: the columns are
// lex-positive, so the feasible region has no recession direction and the
// optimum is finite.
struct Simplex {
  std::vector<std::vector<Rat>> rows;  // [coeffs | rhs]
  std::vector<Rat> obj;
  std::vector<int> basis;
  int nstruct;

  void pivot(int r, int c) {
    auto& pr = rows[r];
    const Rat p = pr[c];
    for (auto& v : pr) v /= p;
    for (auto& other : rows) {
      if (&other == &pr) continue;
      const Rat f = other[c];
      if (f == 0) continue;
      for (std::size_t j = 0; j < other.size(); ++j) other[j] -= f * pr[j];
    }
    const Rat f = obj[c];
    if (f != 0)
      for (std::size_t j = 0; j < obj.size(); ++j) obj[j] -= f * pr[j];
    basis[r] = c;
  }

  // One Bland step over the first `allowed` columns; false when optimal.
  bool step(int allowed) {
    int enter = -1;
    for (int j = 0; j < allowed; ++j)
      if (obj[j] > 0) { enter = j; break; }
    if (enter < 0) return false;
    int leave = -1;
    Rat best;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][enter] <= 0) continue;
      const Rat ratio = rows[i].back() / rows[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave]))
        { leave = static_cast<int>(i); best = ratio; }
    }
    if (leave < 0) throw std::logic_error("unbounded generation LP");
    pivot(leave, enter);
    return true;
  }
};

struct LpResult { bool feasible; Rat value; };

LpResult lp_max_sum(const std::vector<Vec22>& cands, const Vec22& target) {
  const int m = 4;
  const int n = static_cast<int>(cands.size());
  Simplex s;
  s.nstruct = n;
  s.rows.assign(m, std::vector<Rat>(n + m + 1, Rat(0)));
  s.basis.resize(m);
  auto coord = [](const Vec22& v, int i) -> const Int& {
    switch (i) {
      case 0: return v.k;
      case 1: return v.l;
      case 2: return v.m;
      default: return v.n;
    }
  };
  for (int i = 0; i < m; ++i) {
    const bool flip = coord(target, i) < 0;
    for (int j = 0; j < n; ++j) {
      const Int& c = coord(cands[j], i);
      s.rows[i][j] = Rat(flip ? -c : c);
    }
    s.rows[i][n + i] = 1;
    s.rows[i].back() = Rat(flip ? -coord(target, i) : coord(target, i));
    s.basis[i] = n + i;
  }

  // Phase 1: drive the artificials to zero.
  s.obj.assign(n + m + 1, Rat(0));
  for (int i = n; i < n + m; ++i) s.obj[i] = -1;
  for (int i = 0; i < m; ++i)
    for (std::size_t j = 0; j < s.obj.size(); ++j) s.obj[j] += s.rows[i][j];
  while (s.step(n + m)) {}
  if (s.obj.back() != 0) return {false, Rat(0)};

  // Remove leftover basic artificials (value 0) or redundant rows.
  for (int i = static_cast<int>(s.rows.size()) - 1; i >= 0; --i) {
    if (s.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (s.rows[i][j] != 0) { col = j; break; }
    if (col >= 0) {
      s.pivot(i, col);
    } else {
      s.rows.erase(s.rows.begin() + i);
      s.basis.erase(s.basis.begin() + i);
    }
  }

  // Phase 2: maximize the coefficient sum.
  s.obj.assign(n + m + 1, Rat(0));
  for (int j = 0; j < n; ++j) s.obj[j] = 1;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    const Rat f = s.obj[s.basis[i]];
    if (f != 0)
      for (std::size_t j = 0; j < s.obj.size(); ++j) s.obj[j] -= f * s.rows[i][j];
  }
  while (s.step(n)) {}
  return {true, -s.obj.back()};
}

bool reachable(const std::vector<Vec22>& cands, const Vec22& target) {
  const LpResult lp = lp_max_sum(cands, target);
  if (!lp.feasible) return false;
  const Int cap_int = floor_rat(lp.value);
  if (cap_int <= 0) return false;
  if (!fits_int64(cap_int)) throw std::logic_error("generation cap overflow");
  const long long cap = cap_int.convert_to<long long>();

  std::map<std::pair<int, Vec22>, long long> failed_at;
  std::function<bool(int, const Vec22&, long long)> dfs =
      [&](int idx, const Vec22& residual, long long budget) -> bool {
    if (residual.is_zero()) return true;
    if (!lex_positive(residual)) return false;
    if (idx == static_cast<int>(cands.size()) || budget <= 0) return false;
    const auto key = std::make_pair(idx, residual);
    if (auto it = failed_at.find(key); it != failed_at.end() && budget <= it->second)
      return false;
    Vec22 cur = residual;
    for (long long c = 0; c <= budget; ++c) {
      if (dfs(idx + 1, cur, budget - c)) return true;
      cur = cur - cands[idx];
      // Subtracting a lex-positive vector is lex-decreasing, so once cur
      // leaves the nonnegative side it never returns.
      if (!cur.is_zero() && !lex_positive(cur)) break;
    }
    long long& slot = failed_at[key];
    slot = std::max(slot, budget);
    return false;
  };
  return dfs(0, target, cap);
}

}  // namespace

GenerationReport generation_check(const CandidateBasis& basis, int box) {
  if (box < 1) throw std::invalid_argument("box must be positive");
  GenerationReport report;
  report.box = box;
  report.candidates = basis.candidates;
  for (const Vec22& root : enumerate_roots22(box)) {
    if (!lex_positive(root)) continue;
    ++report.checked_count;
    if (!reachable(basis.candidates, root)) report.unreachable.push_back(root);
  }
  return report;
}

const char* cartan_condition_name(CartanCondition c) {
  switch (c) {
    case CartanCondition::Symmetry: return "a_ij = a_ji";
    case CartanCondition::OffDiagonalSign: return "a_ij <= 0 if i != j";
    case CartanCondition::Integrality: return "2a_ij/a_ii in Z if a_ii > 0";
  }
  return "?";
}

std::vector<CartanViolation> cartan_check(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix not square");

  std::vector<CartanViolation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m[i][j] != m[j][i])
        out.push_back({CartanCondition::Symmetry, static_cast<int>(i) + 1,
                       static_cast<int>(j) + 1});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m[i][j] > 0 || m[j][i] > 0)
        out.push_back({CartanCondition::OffDiagonalSign, static_cast<int>(i) + 1,
                       static_cast<int>(j) + 1});
  for (std::size_t i = 0; i < n; ++i) {
    if (!(m[i][i] > 0)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Rat q = 2 * m[i][j] / m[i][i];
      if (boost::multiprecision::denominator(q) != 1)
        out.push_back({CartanCondition::Integrality, static_cast<int>(i) + 1,
                       static_cast<int>(j) + 1});
    }
  }
  return out;
}

}  // namespace latlab
