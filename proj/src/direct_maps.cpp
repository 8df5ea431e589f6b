#include "rsinv/direct_maps.hpp"

#include <algorithm>
#include <numeric>

#include "rsinv/error.hpp"
#include "rsinv/greene.hpp"

namespace rsinv {

namespace {

const Permutation& pattern_321() {
  static const Permutation q({3, 2, 1});
  return q;
}

const Permutation& pattern_123() {
  static const Permutation q({1, 2, 3});
  return q;
}

void require_involution(const Permutation& p) {
  if (!is_involution(p)) throw Error(ErrorCode::NotInvolution, p.to_string());
}

}  // namespace

Permutation f_rev_shortcut(const Permutation& p) {
  Permutation r = reverse(p);
  if (!is_involution(p) || !is_involution(r)) {
    throw Error(ErrorCode::ShortcutInapplicable, "p and its reverse must both be involutions");
  }
  return r;
}

Permutation layered_from_lengths(const std::vector<int>& lengths) {
  std::vector<int> v;
  int used = 0;
  for (int len : lengths) {
    if (len < 1) throw Error(ErrorCode::InvalidArgument, "layer lengths must be positive");
    for (int k = 0; k < len; ++k) v.push_back(used + len - k);
    used += len;
  }
  return Permutation(std::move(v));
}

Permutation f_gfk_tight_direct(const Permutation& p) {
  require_involution(p);
  if (!is_gfk_tight(p)) throw Error(ErrorCode::NotGfkTight, p.to_string());
  std::vector<int> lengths;
  for (const auto& j : jogs(p)) lengths.push_back(j.length());
  return layered_from_lengths(lengths);
}

Tableau tableau_of_321_avoiding(const Permutation& p) {
  require_involution(p);
  if (contains_pattern(p, pattern_321())) throw Error(ErrorCode::Not321Avoiding, p.to_string());
  const auto c = classify_entries(p);
  Tableau t;
  if (p.empty()) return t;
  std::vector<int> top = c.fixed;
  top.insert(top.end(), c.small.begin(), c.small.end());
  std::sort(top.begin(), top.end());
  t.rows.push_back(std::move(top));
  if (!c.large.empty()) t.rows.push_back(c.large);
  return t;
}

Permutation recover_321_avoiding(const Tableau& t) {
  if (!validate(t)) throw Error(ErrorCode::InvalidTableau, to_json(t));
  if (t.row_count() > 2) throw Error(ErrorCode::TooManyRows, "expected at most two rows");
  const int n = t.size();
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  std::vector<int> top = t.rows.empty() ? std::vector<int>{} : t.rows[0];
  std::vector<int> bottom = t.row_count() > 1 ? t.rows[1] : std::vector<int>{};
  while (!top.empty() || !bottom.empty()) {
    // Standardness keeps row 1 non-empty whenever row 2 is.
    if (bottom.empty() || top.back() > bottom.back()) {
      const int m = top.back();
      top.pop_back();
      values[static_cast<std::size_t>(m - 1)] = m;
    } else {
      const int large = bottom.back();
      const int small = top.back();
      bottom.pop_back();
      top.pop_back();
      values[static_cast<std::size_t>(large - 1)] = small;
      values[static_cast<std::size_t>(small - 1)] = large;
    }
  }
  return Permutation(std::move(values));
}

Permutation f_123_avoiding_direct(const Permutation& p) {
  require_involution(p);
  if (contains_pattern(p, pattern_123())) throw Error(ErrorCode::Not123Avoiding, p.to_string());
  const int n = p.size();
  const std::vector<int> breakers = record_breakers(p);
  std::vector<bool> in_top(static_cast<std::size_t>(n) + 1, false);
  for (int i : breakers) in_top[static_cast<std::size_t>(i)] = true;
  Tableau t;
  std::vector<int> top;
  std::vector<int> bottom;
  for (int v = 1; v <= n; ++v) (in_top[static_cast<std::size_t>(v)] ? top : bottom).push_back(v);
  if (!top.empty()) t.rows.push_back(std::move(top));
  if (!bottom.empty()) t.rows.push_back(std::move(bottom));
  if (!validate(t)) {
    throw Error(ErrorCode::InvalidTableau, "record-breaker tableau of " + p.to_string() + " is not standard");
  }
  return recover_321_avoiding(t);
}

}  // namespace rsinv
