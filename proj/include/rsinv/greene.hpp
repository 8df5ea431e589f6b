#pragma once

#include <vector>

#include "rsinv/permutation.hpp"

// Brute-force k-increasing / k-decreasing subsequence lengths and the
// tightness predicates built on them. Nothing here touches RS insertion, so
// the results can be checked against tableau shapes.

namespace rsinv {

inline constexpr int kDefaultOracleCap = 16;

/// Largest n the subset oracle accepts: kDefaultOracleCap, lowered by the
/// RSINV_MAX_N environment variable when set.
int oracle_cap();

/// profile[k] = longest k-increasing subsequence length, for k = 0..n.
///
/// Every one of the 2^n position subsets is scanned. A subset is a union of k
/// increasing subsequences iff it has no decreasing subsequence of length
/// k + 1, so profile[k] is the largest subset whose longest decreasing
/// subsequence is at most k. Throws Error(InstanceTooLarge) above oracle_cap().
std::vector<int> increasing_profile(const Permutation& p);

/// profile[k] = longest k-decreasing subsequence length, for k = 0..n.
std::vector<int> decreasing_profile(const Permutation& p);

/// k >= 1; k > n saturates at n. Throws Error(InvalidArgument) for k < 1.
int longest_k_increasing(const Permutation& p, int k);
int longest_k_decreasing(const Permutation& p, int k);

bool is_gfk_tight(const Permutation& p);
bool is_dually_gfk_tight(const Permutation& p);

/// Positions i at which the longest decreasing subsequence of p_1..p_i
/// exceeds that of p_1..p_{i-1}.
std::vector<int> record_breakers(const Permutation& p);

}  // namespace rsinv
