#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rsinv {

/// A permutation of {1, ..., n} in one-line notation. Positions and values are
/// 1-based everywhere in the public interface; n = 0 is the empty permutation.
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error(InvalidPermutation) unless `values` rearranges 1..n.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  /// Accepts "2 1 5 4 3" or the compact digit form "21543" (n <= 9 only).
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }

  /// Value at 1-based position `pos`.
  int operator()(int pos) const { return values_[static_cast<std::size_t>(pos - 1)]; }

  std::span<const int> values() const noexcept { return values_; }

  /// Position of each value: result[v - 1] is the 1-based position of v.
  std::vector<int> positions() const;

  /// Whitespace-separated form, e.g. "6 7 3 4 8 1 2 5 9".
  std::string to_string() const;
  /// Digit-string form; throws Error(InvalidArgument) when n > 9.
  std::string to_compact() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// The consecutive integers {lo, ..., hi}.
struct ValueInterval {
  int lo = 1;
  int hi = 0;

  int length() const noexcept { return hi - lo + 1; }
  bool contains(int v) const noexcept { return lo <= v && v <= hi; }

  friend auto operator<=>(const ValueInterval&, const ValueInterval&) = default;
  friend bool operator==(const ValueInterval&, const ValueInterval&) = default;
};

/// Fixed points, and the smaller / larger member of every 2-cycle, each sorted.
struct EntryClassification {
  std::vector<int> fixed;
  std::vector<int> small;
  std::vector<int> large;
};

Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);
bool is_involution(const Permutation& p);

EntryClassification classify_entries(const Permutation& p);

/// Positions i with p_i > p_{i+1}, ascending.
std::vector<int> descent_set(const Permutation& p);

/// Maximal value intervals whose members occur left to right in increasing
/// order, sorted by lo.
std::vector<ValueInterval> jogs(const Permutation& p);

/// Maximal value intervals whose members occur left to right in decreasing
/// order, sorted by lo.
std::vector<ValueInterval> reverse_jogs(const Permutation& p);

bool is_layered(const Permutation& p);
/// Throws Error(NotLayered) when !is_layered(p).
std::vector<ValueInterval> layers(const Permutation& p);

inline constexpr int kDefaultPatternCap = 6;

/// Brute-force containment over all position subsets of size |q|.
/// Throws Error(PatternTooLarge) when |q| > cap.
bool contains_pattern(const Permutation& p, const Permutation& q, int cap = kDefaultPatternCap);

inline bool avoids(const Permutation& p, const Permutation& q) { return !contains_pattern(p, q); }

}  // namespace rsinv
