#include "rsinv/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "rsinv/error.hpp"

namespace rsinv {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Splits {1..n} into maximal intervals, breaking between v and v+1 whenever
// `joined(pos[v], pos[v+1])` is false.
template <typename Joined>
std::vector<ValueInterval> interval_runs(const Permutation& p, Joined joined) {
  std::vector<ValueInterval> out;
  const int n = p.size();
  if (n == 0) return out;
  const std::vector<int> pos = p.positions();
  int lo = 1;
  for (int v = 1; v < n; ++v) {
    if (!joined(pos[v - 1], pos[v])) {
      out.push_back({lo, v});
      lo = v + 1;
    }
  }
  out.push_back({lo, n});
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::InvalidPermutation,
                  "values must be a rearrangement of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.rbegin(), v.rend(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  text = trim(text);
  std::vector<int> values;
  const bool spaced = std::any_of(text.begin(), text.end(), is_space);
  if (!spaced && text.size() > 1) {
    if (text.size() > 9) {
      throw Error(ErrorCode::ParseError, "compact form is limited to n <= 9; use whitespace form");
    }
    for (char c : text) {
      if (c < '1' || c > '9') throw Error(ErrorCode::ParseError, "bad digit in '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
    return Permutation(std::move(values));
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j == i) break;
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, v);
    if (ec != std::errc() || ptr != text.data() + j) {
      throw Error(ErrorCode::ParseError, "bad token '" + std::string(text.substr(i, j - i)) + "'");
    }
    values.push_back(v);
    i = j;
  }
  return Permutation(std::move(values));
}

std::vector<int> Permutation::positions() const {
  std::vector<int> pos(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) pos[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
  return pos;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ' ';
    os << values_[i];
  }
  return os.str();
}

std::string Permutation::to_compact() const {
  if (size() > 9) throw Error(ErrorCode::InvalidArgument, "compact form needs n <= 9");
  std::string s;
  for (int v : values_) s.push_back(static_cast<char>('0' + v));
  return s;
}

Permutation inverse(const Permutation& p) { return Permutation(p.positions()); }

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

bool is_involution(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i) {
    if (p(p(i)) != i) return false;
  }
  return true;
}

EntryClassification classify_entries(const Permutation& p) {
  if (!is_involution(p)) throw Error(ErrorCode::NotInvolution, p.to_string());
  EntryClassification c;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) == i) {
      c.fixed.push_back(i);
    } else if (i < p(i)) {
      c.small.push_back(i);
    } else {
      c.large.push_back(i);
    }
  }
  return c;
}

std::vector<int> descent_set(const Permutation& p) {
  std::vector<int> d;
  for (int i = 1; i < p.size(); ++i) {
    if (p(i) > p(i + 1)) d.push_back(i);
  }
  return d;
}

std::vector<ValueInterval> jogs(const Permutation& p) {
  return interval_runs(p, [](int pos_v, int pos_next) { return pos_v < pos_next; });
}

std::vector<ValueInterval> reverse_jogs(const Permutation& p) {
  return interval_runs(p, [](int pos_v, int pos_next) { return pos_v > pos_next; });
}

bool is_layered(const Permutation& p) {
  // Scan blocks left to right: each block starts with its maximum, which must
  // be the largest value not yet used, and then descends by one each step.
  int used = 0;
  int i = 1;
  const int n = p.size();
  while (i <= n) {
    const int top = p(i);
    if (top <= used) return false;
    const int len = top - used;
    if (i + len - 1 > n) return false;
    for (int k = 0; k < len; ++k) {
      if (p(i + k) != top - k) return false;
    }
    used = top;
    i += len;
  }
  return true;
}

std::vector<ValueInterval> layers(const Permutation& p) {
  if (!is_layered(p)) throw Error(ErrorCode::NotLayered, p.to_string());
  return reverse_jogs(p);
}

bool contains_pattern(const Permutation& p, const Permutation& q, int cap) {
  const int k = q.size();
  const int n = p.size();
  if (k > cap) {
    throw Error(ErrorCode::PatternTooLarge,
                "pattern length " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
  }
  if (k == 0) return true;
  if (k > n) return false;

  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 1);
  for (;;) {
    bool match = true;
    for (int a = 0; a < k && match; ++a) {
      for (int b = a + 1; b < k; ++b) {
        const bool in_p = p(idx[a]) < p(idx[b]);
        const bool in_q = q(a + 1) < q(b + 1);
        if (in_p != in_q) {
          match = false;
          break;
        }
      }
    }
    if (match) return true;

    int t = k - 1;
    while (t >= 0 && idx[t] == n - (k - 1 - t)) --t;
    if (t < 0) return false;
    ++idx[t];
    for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
}

}  // namespace rsinv
