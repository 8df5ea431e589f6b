#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rsinv/permutation.hpp"
#include "rsinv/rsk.hpp"
#include "rsinv/tableau.hpp"

// Generators and exact counts. Every generator is a single-pass stream with
// a deterministic order: call next() until it returns nullopt.

namespace rsinv {

using BigInt = boost::multiprecision::cpp_int;

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Positive parts, order significant.
struct Composition {
  std::vector<int> parts;

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1,...,1).
class PartitionStream {
 public:
  explicit PartitionStream(int n);
  std::optional<Partition> next();

 private:
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

/// Compositions of n in lexicographic order: (1,...,1), ..., (n). n = 0 yields
/// the empty composition once.
class CompositionStream {
 public:
  explicit CompositionStream(int n);
  std::optional<Composition> next();

 private:
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

/// Every permutation of length n in lexicographic order.
class PermutationStream {
 public:
  explicit PermutationStream(int n);
  std::optional<Permutation> next();

 private:
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

/// Layered permutations of length n, one per composition, in lexicographic
/// order (which matches the lexicographic order of the compositions).
class LayeredPermutationStream {
 public:
  explicit LayeredPermutationStream(int n) : compositions_(n) {}
  std::optional<Permutation> next();

 private:
  CompositionStream compositions_;
};

/// Involutions of length n in lexicographic order.
class InvolutionStream {
 public:
  explicit InvolutionStream(int n);
  std::optional<Permutation> next();

 private:
  bool advance();
  void fill_from(std::size_t depth);

  int n_;
  std::vector<int> values_;     // 0 = unassigned
  std::vector<int> positions_;  // smallest unassigned position at each step
  bool started_ = false;
  bool done_ = false;
};

/// Layered tableaux on n boxes, grown one entry at a time: entry k goes either
/// to the end of the top row or to the end of the row below k - 1. The top-row
/// choice is taken first at every step.
class LayeredTableauStream {
 public:
  explicit LayeredTableauStream(int n);
  std::optional<Tableau> next();

 private:
  int n_;
  std::uint64_t choice_ = 0;
  std::uint64_t end_;
};

/// inverse_rsk(P, Q) over all ordered pairs of layered tableaux of equal
/// shape. Shapes run in the order they first appear in LayeredTableauStream,
/// and pairs in (P, Q) generation order within a shape.
class GeneralizedLayeredStream {
 public:
  explicit GeneralizedLayeredStream(int n);
  std::optional<Permutation> next();

 private:
  std::vector<std::vector<Tableau>> groups_;
  std::size_t group_ = 0;
  std::size_t p_ = 0;
  std::size_t q_ = 0;
};

template <typename Stream>
auto collect(Stream stream) {
  std::vector<typename decltype(stream.next())::value_type> out;
  while (auto v = stream.next()) out.push_back(std::move(*v));
  return out;
}

/// Layered permutation with the given layer lengths.
Permutation layered_permutation(const Composition& c);

/// Number of partitions of n, via Euler's pentagonal number recurrence.
BigInt partition_count(int n);

/// Distinct orderings of h's parts: len! / prod(multiplicity!).
BigInt comp_count(const Partition& h);

/// Sum over partitions h of n of comp_count(h)^2.
BigInt count_A(int n);

BigInt count_layered(int n);
BigInt count_involutions(int n);

inline constexpr int kBruteCountCap = 8;

/// Permutations p of length n with p and inverse(p) both dually GFK-tight,
/// counted with the subset oracle. Throws Error(InstanceTooLarge) for n > 8.
std::uint64_t brute_count_general(int n);

/// p(n) * A_n >= 4^(n-1) and A_n <= 4^(n-1), exactly.
bool verify_bounds(int n);

}  // namespace rsinv
