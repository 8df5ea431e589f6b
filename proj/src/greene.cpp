#include "rsinv/greene.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

#include "rsinv/error.hpp"

namespace rsinv {

namespace {

// For each subset S of positions (bit i = position i + 1), chain[S] is the
// longest chain in S under `precedes` ending at S's last position, and
// longest[S] the longest chain anywhere in S. Chains ending at the last
// position j extend a chain ending at some earlier i in S, which lives in the
// subset of S up to i, so both tables fill in increasing mask order.
template <typename Precedes>
std::vector<int> subset_profile(const Permutation& p, Precedes precedes) {
  const int n = p.size();
  if (n > oracle_cap()) {
    throw Error(ErrorCode::InstanceTooLarge,
                "n = " + std::to_string(n) + " exceeds oracle cap " + std::to_string(oracle_cap()));
  }
  const auto v = p.values();
  const std::uint32_t subsets = std::uint32_t{1} << n;
  std::vector<std::uint8_t> chain(subsets, 0);
  std::vector<std::uint8_t> longest(subsets, 0);
  // best_size[d] = largest subset whose longest chain has length exactly d.
  std::vector<int> best_size(static_cast<std::size_t>(n) + 1, 0);

  for (std::uint32_t s = 1; s < subsets; ++s) {
    const int j = std::bit_width(s) - 1;
    const std::uint32_t rest = s ^ (std::uint32_t{1} << j);
    std::uint8_t best = 0;
    for (std::uint32_t bits = rest; bits != 0; bits &= bits - 1) {
      const int i = std::countr_zero(bits);
      if (precedes(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)])) {
        const std::uint32_t upto_i = rest & ((std::uint32_t{2} << i) - 1);
        best = std::max(best, chain[upto_i]);
      }
    }
    chain[s] = static_cast<std::uint8_t>(best + 1);
    longest[s] = std::max(longest[rest], chain[s]);
    auto& slot = best_size[longest[s]];
    slot = std::max(slot, std::popcount(s));
  }

  std::vector<int> profile(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k <= n; ++k) profile[static_cast<std::size_t>(k)] = std::max(profile[static_cast<std::size_t>(k - 1)], best_size[static_cast<std::size_t>(k)]);
  return profile;
}

int saturated(const std::vector<int>& profile, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  const int n = static_cast<int>(profile.size()) - 1;
  return profile[static_cast<std::size_t>(std::min(k, n))];
}

bool tight(const std::vector<ValueInterval>& runs, const std::vector<int>& profile) {
  std::vector<int> lengths;
  for (const auto& r : runs) lengths.push_back(r.length());
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  int sum = 0;
  for (std::size_t k = 1; k <= lengths.size(); ++k) {
    sum += lengths[k - 1];
    if (sum != profile[k]) return false;
  }
  return true;
}

}  // namespace

int oracle_cap() {
  int cap = kDefaultOracleCap;
  if (const char* env = std::getenv("RSINV_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) cap = std::min<long>(cap, v);
  }
  return cap;
}

// Increasing-union subsets are those without a long decreasing chain.
std::vector<int> increasing_profile(const Permutation& p) {
  return subset_profile(p, [](int earlier, int later) { return earlier > later; });
}

std::vector<int> decreasing_profile(const Permutation& p) {
  return subset_profile(p, [](int earlier, int later) { return earlier < later; });
}

int longest_k_increasing(const Permutation& p, int k) { return saturated(increasing_profile(p), k); }

int longest_k_decreasing(const Permutation& p, int k) { return saturated(decreasing_profile(p), k); }

bool is_gfk_tight(const Permutation& p) { return tight(jogs(p), increasing_profile(p)); }

bool is_dually_gfk_tight(const Permutation& p) { return tight(reverse_jogs(p), decreasing_profile(p)); }

std::vector<int> record_breakers(const Permutation& p) {
  const int n = p.size();
  std::vector<int> ending(static_cast<std::size_t>(n), 1);
  std::vector<int> out;
  int prefix_best = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (p(j + 1) > p(i + 1)) ending[i] = std::max(ending[i], ending[j] + 1);
    }
    if (ending[i] > prefix_best) {
      prefix_best = ending[i];
      out.push_back(i + 1);
    }
  }
  return out;
}

}  // namespace rsinv
