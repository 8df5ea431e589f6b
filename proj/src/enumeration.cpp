#include "rsinv/enumeration.hpp"

#include <algorithm>
#include <numeric>

#include "rsinv/error.hpp"
#include "rsinv/greene.hpp"

namespace rsinv {

namespace {

void require_nonnegative(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be non-negative");
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

// ---------------------------------------------------------------- partitions

PartitionStream::PartitionStream(int n) {
  require_nonnegative(n);
  if (n > 0) current_.push_back(n);
}

std::optional<Partition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Partition{current_};
  }
  // Rightmost part larger than one; everything after it is a 1.
  auto it = std::find_if(current_.rbegin(), current_.rend(), [](int x) { return x > 1; });
  if (it == current_.rend()) {
    done_ = true;
    return std::nullopt;
  }
  const auto i = static_cast<std::size_t>(std::distance(it, current_.rend()) - 1);
  const int part = current_[i] - 1;
  int remaining = static_cast<int>(current_.size() - i - 1) + 1;
  current_.resize(i + 1);
  current_[i] = part;
  while (remaining > 0) {
    const int take = std::min(part, remaining);
    current_.push_back(take);
    remaining -= take;
  }
  return Partition{current_};
}

CompositionStream::CompositionStream(int n) {
  require_nonnegative(n);
  current_.assign(static_cast<std::size_t>(n), 1);
}

std::optional<Composition> CompositionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Composition{current_};
  }
  if (current_.size() <= 1) {
    done_ = true;
    return std::nullopt;
  }
  const int last = current_.back();
  current_.pop_back();
  ++current_.back();
  current_.insert(current_.end(), static_cast<std::size_t>(last - 1), 1);
  return Composition{current_};
}

PermutationStream::PermutationStream(int n) {
  require_nonnegative(n);
  current_.resize(static_cast<std::size_t>(n));
  std::iota(current_.begin(), current_.end(), 1);
}

std::optional<Permutation> PermutationStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
  } else if (!std::next_permutation(current_.begin(), current_.end())) {
    done_ = true;
    return std::nullopt;
  }
  return Permutation(current_);
}

Permutation layered_permutation(const Composition& c) {
  std::vector<int> v;
  int used = 0;
  for (int len : c.parts) {
    for (int k = 0; k < len; ++k) v.push_back(used + len - k);
    used += len;
  }
  return Permutation(std::move(v));
}

std::optional<Permutation> LayeredPermutationStream::next() {
  if (auto c = compositions_.next()) return layered_permutation(*c);
  return std::nullopt;
}

// ---------------------------------------------------------------- involutions

InvolutionStream::InvolutionStream(int n) : n_(n), values_(static_cast<std::size_t>(n) + 1, 0) {
  require_nonnegative(n);
}

void InvolutionStream::fill_from(std::size_t pos) {
  for (auto i = pos; i <= static_cast<std::size_t>(n_); ++i) {
    if (values_[i] == 0) {
      values_[i] = static_cast<int>(i);
      positions_.push_back(static_cast<int>(i));
    }
  }
}

// Each step fixes the smallest open position, first as a fixed point and then
// paired with each larger open position in turn; that order is lexicographic.
bool InvolutionStream::advance() {
  while (!positions_.empty()) {
    const int pos = positions_.back();
    positions_.pop_back();
    const int partner = values_[static_cast<std::size_t>(pos)];
    values_[static_cast<std::size_t>(pos)] = 0;
    values_[static_cast<std::size_t>(partner)] = 0;
    for (int j = partner + 1; j <= n_; ++j) {
      if (values_[static_cast<std::size_t>(j)] == 0) {
        values_[static_cast<std::size_t>(pos)] = j;
        values_[static_cast<std::size_t>(j)] = pos;
        positions_.push_back(pos);
        fill_from(static_cast<std::size_t>(pos) + 1);
        return true;
      }
    }
  }
  return false;
}

std::optional<Permutation> InvolutionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    fill_from(1);
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return Permutation(std::vector<int>(values_.begin() + 1, values_.end()));
}

// ---------------------------------------------------------------- tableaux

LayeredTableauStream::LayeredTableauStream(int n) : n_(n) {
  require_nonnegative(n);
  if (n > 63) throw Error(ErrorCode::InstanceTooLarge, "layered tableaux stream supports n <= 63");
  end_ = n <= 1 ? 1 : std::uint64_t{1} << (n - 1);
}

std::optional<Tableau> LayeredTableauStream::next() {
  if (choice_ >= end_) return std::nullopt;
  Tableau t;
  if (n_ > 0) {
    t.rows.push_back({1});
    std::size_t row = 0;
    for (int k = 2; k <= n_; ++k) {
      // Bit for entry k, most significant first; set means "below k - 1".
      const bool below = (choice_ >> (n_ - k)) & 1U;
      row = below ? row + 1 : 0;
      if (row == t.rows.size()) t.rows.emplace_back();
      t.rows[row].push_back(k);
    }
  }
  ++choice_;
  return t;
}

GeneralizedLayeredStream::GeneralizedLayeredStream(int n) {
  std::map<Shape, std::size_t> index;
  LayeredTableauStream tableaux(n);
  while (auto t = tableaux.next()) {
    auto [it, inserted] = index.try_emplace(shape(*t), groups_.size());
    if (inserted) groups_.emplace_back();
    groups_[it->second].push_back(std::move(*t));
  }
}

std::optional<Permutation> GeneralizedLayeredStream::next() {
  if (group_ >= groups_.size()) return std::nullopt;
  const auto& g = groups_[group_];
  Permutation p = inverse_rsk({g[p_], g[q_]});
  if (++q_ == g.size()) {
    q_ = 0;
    if (++p_ == g.size()) {
      p_ = 0;
      ++group_;
    }
  }
  return p;
}

// ---------------------------------------------------------------- counting

BigInt partition_count(int n) {
  require_nonnegative(n);
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt sum = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      BigInt term = p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) term += p[static_cast<std::size_t>(m - g2)];
      if (k % 2 == 1) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    p[static_cast<std::size_t>(m)] = sum;
  }
  return p[static_cast<std::size_t>(n)];
}

BigInt comp_count(const Partition& h) {
  BigInt c = factorial(static_cast<int>(h.parts.size()));
  std::map<int, int> multiplicity;
  for (int part : h.parts) ++multiplicity[part];
  for (const auto& [part, m] : multiplicity) c /= factorial(m);
  return c;
}

BigInt count_A(int n) {
  BigInt total = 0;
  PartitionStream parts(n);
  while (auto h = parts.next()) {
    const BigInt c = comp_count(*h);
    total += c * c;
  }
  return total;
}

BigInt count_layered(int n) {
  require_nonnegative(n);
  if (n == 0) return 1;
  return BigInt(1) << (n - 1);
}

BigInt count_involutions(int n) {
  require_nonnegative(n);
  BigInt prev = 1;  // a(0)
  BigInt cur = 1;   // a(1)
  if (n == 0) return prev;
  for (int m = 2; m <= n; ++m) {
    BigInt next = cur + (m - 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::uint64_t brute_count_general(int n) {
  require_nonnegative(n);
  if (n > kBruteCountCap) {
    throw Error(ErrorCode::InstanceTooLarge, "brute_count_general is capped at n = " + std::to_string(kBruteCountCap));
  }
  std::uint64_t count = 0;
  PermutationStream perms(n);
  while (auto p = perms.next()) {
    if (is_dually_gfk_tight(*p) && is_dually_gfk_tight(inverse(*p))) ++count;
  }
  return count;
}

bool verify_bounds(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  const BigInt a = count_A(n);
  const BigInt four = BigInt(1) << (2 * (n - 1));
  return partition_count(n) * a >= four && a <= four;
}

}  // namespace rsinv
