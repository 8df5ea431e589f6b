#pragma once

// Test-only brute-force routes. None of these share code paths with the
// library functions they are compared against.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "rsinv/permutation.hpp"
#include "rsinv/rsk.hpp"

namespace oracle {

using rsinv::Permutation;

// Bitmasks (bit i = position i + 1) of every strictly increasing subsequence.
inline std::vector<std::uint32_t> increasing_subsets(const Permutation& p, bool decreasing = false) {
  const int n = p.size();
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    int last = decreasing ? n + 1 : 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(s >> i & 1U)) continue;
      const int v = p(i + 1);
      ok = decreasing ? v < last : v > last;
      last = v;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

// Largest union of k monotone subsequences, by direct search over k-tuples.
inline int union_of_k(const std::vector<std::uint32_t>& chains, int k, std::uint32_t acc = 0, std::size_t from = 0) {
  if (k == 0) return std::popcount(acc);
  int best = std::popcount(acc);
  for (std::size_t i = from; i < chains.size(); ++i) best = std::max(best, union_of_k(chains, k - 1, acc | chains[i], i));
  return best;
}

inline int k_increasing(const Permutation& p, int k) { return union_of_k(increasing_subsets(p), k); }
inline int k_decreasing(const Permutation& p, int k) { return union_of_k(increasing_subsets(p, true), k); }

// Pattern containment by checking every subset for order-isomorphism via
// standardization.
inline bool contains(const Permutation& p, const Permutation& q) {
  const int n = p.size();
  const int k = q.size();
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    if (std::popcount(s) != k) continue;
    std::vector<int> sub;
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1U) sub.push_back(p(i + 1));
    }
    std::vector<int> sorted = sub;
    std::sort(sorted.begin(), sorted.end());
    bool same = true;
    for (int i = 0; i < k && same; ++i) {
      const int rank = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sub[i]) - sorted.begin()) + 1;
      same = rank == q(i + 1);
    }
    if (same) return true;
  }
  return false;
}

// f by definition: search all involutions of the same length for the one
// whose tableau is the transpose.
inline Permutation f_by_search(const Permutation& p) {
  const auto target = rsinv::transpose(rsinv::rsk(p).P);
  std::vector<int> v(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) v[static_cast<std::size_t>(i)] = i + 1;
  do {
    Permutation c(v);
    if (rsinv::is_involution(c) && rsinv::rsk(c).P == target) return c;
  } while (std::next_permutation(v.begin(), v.end()));
  return Permutation();
}

inline Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

}  // namespace oracle
