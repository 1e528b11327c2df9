#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "latlab/gamma22.hpp"
#include "latlab/numeric.hpp"

namespace testsupport {

// splitmix64; seeds are part of the test contract, never reseed from time.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  latlab::Vec22 vec22(long long box) {
    return latlab::Vec22(range(-box, box), range(-box, box), range(-box, box),
                         range(-box, box));
  }
};

// Quadruple-loop oracle for norm-2 vectors of the (2,2) lattice: the form is
// -2kl - 2mn, so roots are exactly the solutions of kl + mn == -1.
inline std::vector<latlab::Vec22> brute_roots(long long box) {
  std::vector<latlab::Vec22> out;
  for (long long k = -box; k <= box; ++k)
    for (long long l = -box; l <= box; ++l)
      for (long long m = -box; m <= box; ++m)
        for (long long n = -box; n <= box; ++n)
          if (k * l + m * n == -1) out.emplace_back(k, l, m, n);
  std::sort(out.begin(), out.end());
  return out;
}

// Oracle for k-coloured partition counts: one-colour table by the classic
// part-size DP, then a k-fold convolution. Independent of the series code.
inline std::vector<latlab::Int> oracle_colored(int k, int upto) {
  std::vector<latlab::Int> one(static_cast<std::size_t>(upto) + 1, latlab::Int(0));
  one[0] = 1;
  for (int s = 1; s <= upto; ++s)
    for (int j = s; j <= upto; ++j) one[j] += one[j - s];
  std::vector<latlab::Int> acc(one.size(), latlab::Int(0));
  acc[0] = 1;
  for (int c = 0; c < k; ++c) {
    std::vector<latlab::Int> next(one.size(), latlab::Int(0));
    for (int i = 0; i <= upto; ++i)
      for (int j = 0; i + j <= upto; ++j) next[i + j] += acc[i] * one[j];
    acc = std::move(next);
  }
  return acc;
}

}  // namespace testsupport
