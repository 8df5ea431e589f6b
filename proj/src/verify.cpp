#include "rsinv/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <set>

#include "rsinv/direct_maps.hpp"
#include "rsinv/enumeration.hpp"
#include "rsinv/error.hpp"
#include "rsinv/greene.hpp"
#include "rsinv/rsk.hpp"

namespace rsinv::verify {

void CheckResult::expect(bool ok, const std::string& what) {
  ++instances;
  if (!ok) {
    if (failures == 0) first_failure = what;
    ++failures;
  }
}

namespace {

// Runs `body` for one instance; an exception counts as a failure.
void check(CheckResult& r, const std::string& what, const std::function<bool()>& body) {
  bool ok = false;
  std::string label = what;
  try {
    ok = body();
  } catch (const std::exception& e) {
    label += " (threw " + std::string(e.what()) + ")";
  }
  r.expect(ok, label);
}

template <typename Stream, typename Fn>
void for_each(Stream stream, Fn fn) {
  while (auto v = stream.next()) fn(*v);
}

template <typename Fn>
void each_permutation(int max_n, Fn fn) {
  for (int n = 1; n <= max_n; ++n) for_each(PermutationStream(n), fn);
}

template <typename Fn>
void each_involution(int max_n, Fn fn) {
  for (int n = 1; n <= max_n; ++n) for_each(InvolutionStream(n), fn);
}

int oracle_bound(int max_n) { return std::min(max_n, oracle_cap()); }

std::vector<int> prefix_sums(const std::vector<int>& v) {
  std::vector<int> out;
  int s = 0;
  for (int x : v) out.push_back(s += x);
  return out;
}

std::vector<int> sorted_lengths(const std::vector<ValueInterval>& runs) {
  std::vector<int> out;
  for (const auto& r : runs) out.push_back(r.length());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Maximal runs of adjacent positions on which p increases.
std::vector<ValueInterval> ascending_runs(const Permutation& p) {
  std::vector<ValueInterval> out;
  int lo = 1;
  for (int i = 1; i < p.size(); ++i) {
    if (p(i) > p(i + 1)) {
      out.push_back({lo, i});
      lo = i + 1;
    }
  }
  if (p.size() > 0) out.push_back({lo, p.size()});
  return out;
}

bool contiguous_cover(const std::vector<ValueInterval>& runs, int n) {
  int next = 1;
  for (const auto& r : runs) {
    if (r.lo != next || r.hi < r.lo) return false;
    next = r.hi + 1;
  }
  return next == n + 1;
}

std::string str(const Permutation& p) { return p.to_string(); }

}  // namespace

// ---------------------------------------------------------------- perm-core

CheckResult perm_core_identities(int max_n) {
  CheckResult r{"perm-core identities"};
  each_permutation(max_n, [&](const Permutation& p) {
    check(r, str(p), [&] {
      bool ok = inverse(inverse(p)) == p && reverse(reverse(p)) == p;
      ok = ok && contiguous_cover(jogs(p), p.size()) && contiguous_cover(reverse_jogs(p), p.size());
      if (is_involution(p)) ok = ok && jogs(p) == ascending_runs(p);
      if (is_layered(p)) ok = ok && is_involution(p);
      return ok;
    });
  });
  return r;
}

CheckResult layered_pattern_characterization(int max_n) {
  CheckResult r{"layered <=> avoids 231 and 312"};
  const Permutation p231({2, 3, 1});
  const Permutation p312({3, 1, 2});
  each_permutation(max_n, [&](const Permutation& p) {
    check(r, str(p), [&] { return is_layered(p) == (avoids(p, p231) && avoids(p, p312)); });
  });
  return r;
}

CheckResult layered_count(int max_n) {
  CheckResult r{"layered count = 2^(n-1)"};
  for (int n = 1; n <= max_n; ++n) {
    check(r, "n=" + std::to_string(n), [&] {
      std::uint64_t brute = 0;
      for_each(PermutationStream(n), [&](const Permutation& p) { brute += is_layered(p) ? 1 : 0; });
      const auto generated = collect(LayeredPermutationStream(n));
      const std::set<Permutation> distinct(generated.begin(), generated.end());
      const bool all_layered = std::all_of(generated.begin(), generated.end(), [](const auto& p) { return is_layered(p); });
      const std::uint64_t expected = std::uint64_t{1} << (n - 1);
      return brute == expected && distinct.size() == expected && generated.size() == expected && all_layered;
    });
  }
  return r;
}

// ---------------------------------------------------------------- tableaux / RS

CheckResult f_is_involution(int max_n) {
  CheckResult r{"f(f(p)) = p on involutions"};
  each_involution(max_n, [&](const Permutation& p) {
    check(r, str(p), [&] {
      const Permutation q = f_involution(p);
      return is_involution(q) && f_involution(q) == p;
    });
  });
  return r;
}

CheckResult rsk_round_trip(int max_n) {
  CheckResult r{"inverse_rsk(rsk(p)) = p"};
  each_permutation(max_n, [&](const Permutation& p) {
    check(r, str(p), [&] {
      const auto pair = rsk(p);
      return validate(pair.P) && validate(pair.Q) && shape(pair.P) == shape(pair.Q) && inverse_rsk(pair) == p;
    });
  });
  return r;
}

CheckResult schutzenberger_symmetry(int max_n) {
  CheckResult r{"rsk(p^-1) = (Q, P)"};
  each_permutation(max_n, [&](const Permutation& p) {
    check(r, str(p), [&] {
      const auto pair = rsk(p);
      return rsk(inverse(p)) == TableauPair{pair.Q, pair.P};
    });
  });
  return r;
}

CheckResult reversal_transposes(int max_n) {
  CheckResult r{"P(p^rev) = P(p)^T"};
  each_permutation(max_n, [&](const Permutation& p) {
    check(r, str(p), [&] { return rsk(reverse(p)).P == transpose(rsk(p).P); });
  });
  return r;
}

CheckResult descent_transport(int max_n) {
  CheckResult r{"descents(p) = descents(Q(p))"};
  each_permutation(max_n, [&](const Permutation& p) {
    check(r, str(p), [&] { return descent_set(p) == tableau_descents(rsk(p).Q); });
  });
  return r;
}

CheckResult layered_tableau_lemma(int max_n) {
  CheckResult r{"tableaux of layered perms = layered tableaux"};
  for (int n = 1; n <= max_n; ++n) {
    check(r, "n=" + std::to_string(n), [&] {
      std::set<Tableau> of_layered;
      for_each(LayeredPermutationStream(n), [&](const Permutation& w) { of_layered.insert(tableau_of_involution(w)); });
      // Every SYT on n boxes is the tableau of exactly one involution.
      std::set<Tableau> passing;
      for_each(InvolutionStream(n), [&](const Permutation& p) {
        Tableau t = tableau_of_involution(p);
        if (is_layered_tableau(t)) passing.insert(std::move(t));
      });
      std::set<Tableau> grown;
      for_each(LayeredTableauStream(n), [&](const Tableau& t) { grown.insert(t); });
      const std::size_t expected = std::size_t{1} << (n - 1);
      return of_layered.size() == expected && of_layered == passing && passing == grown;
    });
  }
  return r;
}

CheckResult transpose_identities(int max_n) {
  CheckResult r{"transpose identities on SYT"};
  each_involution(max_n, [&](const Permutation& p) {
    const Tableau t = tableau_of_involution(p);
    check(r, to_json(t), [&] {
      const Tableau tt = transpose(t);
      std::vector<int> complement;
      const auto d = tableau_descents(t);
      for (int i = 1; i < t.size(); ++i) {
        if (!std::binary_search(d.begin(), d.end(), i)) complement.push_back(i);
      }
      return validate(tt) && transpose(tt) == t && satisfies_transposed_layer(t) == is_layered_tableau(tt) &&
             tableau_descents(tt) == complement && shape(tt) == conjugate(shape(t)) &&
             conjugate(conjugate(shape(t))) == shape(t);
    });
  });
  return r;
}

CheckResult layer_to_jog(int max_n) {
  CheckResult r{"layers(w) = jogs(f(w))"};
  for (int n = 1; n <= max_n; ++n) {
    for_each(LayeredPermutationStream(n), [&](const Permutation& w) {
      check(r, str(w), [&] { return layers(w) == jogs(f_involution(w)); });
    });
  }
  return r;
}

CheckResult ascent_flip(int max_n) {
  CheckResult r{"ascending pair a,a+1 flips under f"};
  each_involution(max_n, [&](const Permutation& p) {
    check(r, str(p), [&] {
      const auto before = p.positions();
      const auto after = f_involution(p).positions();
      for (std::size_t a = 0; a + 1 < before.size(); ++a) {
        if (before[a] < before[a + 1] && !(after[a] > after[a + 1])) return false;
      }
      return true;
    });
  });
  return r;
}

// ---------------------------------------------------------------- greene

CheckResult greene_shape_agreement(int max_n) {
  CheckResult r{"shape prefix sums = oracle k-inc / k-dec"};
  each_permutation(oracle_bound(max_n), [&](const Permutation& p) {
    check(r, str(p), [&] {
      const Shape s = shape(rsk(p).P);
      const auto rows = prefix_sums(s.rows);
      const auto cols = prefix_sums(conjugate(s).rows);
      const auto inc = increasing_profile(p);
      const auto dec = decreasing_profile(p);
      const int n = p.size();
      for (int k = 1; k <= n; ++k) {
        const int row_sum = rows[static_cast<std::size_t>(std::min<int>(k, static_cast<int>(rows.size())) - 1)];
        const int col_sum = cols[static_cast<std::size_t>(std::min<int>(k, static_cast<int>(cols.size())) - 1)];
        if (row_sum != inc[static_cast<std::size_t>(k)] || col_sum != dec[static_cast<std::size_t>(k)]) return false;
      }
      return true;
    });
  });
  return r;
}

CheckResult record_breakers_first_column(int max_n) {
  CheckResult r{"record-breakers = first column of Q"};
  each_permutation(max_n, [&](const Permutation& p) {
    check(r, str(p), [&] {
      std::vector<int> first_column;
      for (const auto& row : rsk(p).Q.rows) first_column.push_back(row.front());
      return record_breakers(p) == first_column;
    });
  });
  return r;
}

CheckResult jog_lower_bound(int max_n) {
  CheckResult r{"k longest jogs <= longest k-increasing"};
  each_permutation(oracle_bound(max_n), [&](const Permutation& p) {
    check(r, str(p), [&] {
      const auto inc = increasing_profile(p);
      const auto jog_sums = prefix_sums(sorted_lengths(jogs(p)));
      const int n = p.size();
      const int lds = decreasing_profile(p)[1];
      for (int k = 1; k <= n; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        const int jog_sum = jog_sums[std::min(kk, jog_sums.size()) - 1];
        if (inc[kk] < jog_sum || inc[kk] < inc[kk - 1] || inc[kk] > n) return false;
        if ((k >= lds) != (inc[kk] == n)) return false;
      }
      return true;
    });
  });
  return r;
}

// ---------------------------------------------------------------- characterizations

CheckResult transposed_layer_iff_tight(int max_n) {
  CheckResult r{"transposed layer <=> GFK-tight (involutions)"};
  each_involution(oracle_bound(max_n), [&](const Permutation& p) {
    check(r, str(p), [&] { return satisfies_transposed_layer(tableau_of_involution(p)) == is_gfk_tight(p); });
  });
  return r;
}

CheckResult layered_iff_dually_tight_involution(int max_n) {
  CheckResult r{"layered <=> dually GFK-tight involution"};
  each_permutation(oracle_bound(max_n), [&](const Permutation& p) {
    check(r, str(p), [&] { return is_layered(p) == (is_involution(p) && is_dually_gfk_tight(p)); });
  });
  return r;
}

CheckResult general_theorem(int max_n) {
  CheckResult r{"(A) <=> (B) in both forms, counts = A_n"};
  const int bound = std::min(oracle_bound(max_n), kBruteCountCap);
  for (int n = 1; n <= bound; ++n) {
    std::uint64_t layered_pairs = 0;
    std::uint64_t transposed_pairs = 0;
    for_each(PermutationStream(n), [&](const Permutation& p) {
      check(r, str(p), [&] {
        const auto pair = rsk(p);
        const Permutation q = inverse(p);
        const bool a_layered = is_layered_tableau(pair.P) && is_layered_tableau(pair.Q);
        const bool b_dual = is_dually_gfk_tight(p) && is_dually_gfk_tight(q);
        const bool a_transposed = satisfies_transposed_layer(pair.P) && satisfies_transposed_layer(pair.Q);
        const bool b_tight = is_gfk_tight(p) && is_gfk_tight(q);
        layered_pairs += a_layered ? 1 : 0;
        transposed_pairs += a_transposed ? 1 : 0;
        return a_layered == b_dual && a_transposed == b_tight;
      });
    });
    check(r, "count n=" + std::to_string(n), [&] {
      const BigInt a = count_A(n);
      return a == layered_pairs && a == transposed_pairs && a == brute_count_general(n);
    });
  }
  return r;
}

CheckResult shape_multiset_law(int max_n) {
  CheckResult r{"jog lengths of p, p^-1 and shape agree when both tight"};
  each_permutation(oracle_bound(max_n), [&](const Permutation& p) {
    const Permutation q = inverse(p);
    if (!is_gfk_tight(p) || !is_gfk_tight(q)) return;
    check(r, str(p), [&] {
      const auto lp = sorted_lengths(jogs(p));
      return lp == sorted_lengths(jogs(q)) && lp == shape(rsk(p).P).rows;
    });
  });
  return r;
}

// ---------------------------------------------------------------- direct maps

CheckResult gfk_tight_direct_agrees(int max_n) {
  CheckResult r{"f_gfk_tight_direct = f on GFK-tight involutions"};
  each_involution(oracle_bound(max_n), [&](const Permutation& p) {
    if (!is_gfk_tight(p)) return;
    check(r, str(p), [&] {
      const Permutation d = f_gfk_tight_direct(p);
      return d == f_involution(p) && is_layered(d) && layers(d) == jogs(p);
    });
  });
  return r;
}

CheckResult avoiding_123_direct_agrees(int max_n) {
  CheckResult r{"f_123_avoiding_direct = f on 123-avoiding involutions"};
  const Permutation p123({1, 2, 3});
  each_involution(max_n, [&](const Permutation& p) {
    if (contains_pattern(p, p123)) return;
    check(r, str(p), [&] { return f_123_avoiding_direct(p) == f_involution(p); });
  });
  return r;
}

CheckResult two_row_round_trip(int max_n) {
  CheckResult r{"321-avoiding two-row tableau and recovery"};
  const Permutation p321({3, 2, 1});
  each_involution(max_n, [&](const Permutation& p) {
    if (contains_pattern(p, p321)) return;
    check(r, str(p), [&] {
      const Tableau t = tableau_of_321_avoiding(p);
      return t == tableau_of_involution(p) && t.row_count() <= 2 && recover_321_avoiding(t) == p;
    });
  });
  return r;
}

CheckResult rev_shortcut_agrees(int max_n) {
  CheckResult r{"f_rev_shortcut = f where applicable"};
  each_involution(max_n, [&](const Permutation& p) {
    if (!is_involution(reverse(p))) return;
    check(r, str(p), [&] { return f_rev_shortcut(p) == f_involution(p); });
  });
  return r;
}

// ---------------------------------------------------------------- counting

CheckResult count_formula_matches_brute_force(int max_n) {
  CheckResult r{"count_A(n) = brute_count_general(n)"};
  const int bound = std::min(oracle_bound(max_n), kBruteCountCap);
  for (int n = 1; n <= bound; ++n) {
    check(r, "n=" + std::to_string(n), [&] { return count_A(n) == brute_count_general(n); });
  }
  return r;
}

CheckResult generalized_layered_distinct(int max_n) {
  CheckResult r{"generalized layered: distinct, count = A_n, both tableaux layered"};
  for (int n = 1; n <= oracle_bound(max_n); ++n) {
    check(r, "n=" + std::to_string(n), [&] {
      const auto perms = collect(GeneralizedLayeredStream(n));
      const std::set<Permutation> distinct(perms.begin(), perms.end());
      bool ok = distinct.size() == perms.size() && count_A(n) == perms.size();
      for (const auto& p : perms) {
        const auto pair = rsk(p);
        ok = ok && is_layered_tableau(pair.P) && is_layered_tableau(pair.Q) && is_dually_gfk_tight(p) &&
             is_dually_gfk_tight(inverse(p));
      }
      return ok;
    });
  }
  return r;
}

CheckResult exponential_bounds(int max_n) {
  CheckResult r{"4^(n-1)/p(n) <= A_n <= 4^(n-1)"};
  for (int n = 1; n <= max_n; ++n) {
    check(r, "n=" + std::to_string(n), [&] { return verify_bounds(n); });
  }
  return r;
}

CheckResult composition_sum(int max_n) {
  CheckResult r{"sum of comp(h) = 2^(n-1), p(n) matches stream"};
  for (int n = 1; n <= max_n; ++n) {
    check(r, "n=" + std::to_string(n), [&] {
      BigInt sum = 0;
      BigInt parts = 0;
      for_each(PartitionStream(n), [&](const Partition& h) {
        sum += comp_count(h);
        ++parts;
      });
      return sum == count_layered(n) && parts == partition_count(n);
    });
  }
  return r;
}

// ---------------------------------------------------------------- suites

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::All;
  if (name == "rsk") return Suite::Rsk;
  if (name == "greene") return Suite::Greene;
  if (name == "characterization") return Suite::Characterization;
  if (name == "counting") return Suite::Counting;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::All: return "all";
    case Suite::Rsk: return "rsk";
    case Suite::Greene: return "greene";
    case Suite::Characterization: return "characterization";
    case Suite::Counting: return "counting";
  }
  return "?";
}

namespace {

std::vector<CheckResult> run_one(Suite s, int n) {
  switch (s) {
    case Suite::Rsk:
      return {f_is_involution(n),    rsk_round_trip(n),       schutzenberger_symmetry(n),
              reversal_transposes(n), descent_transport(n),    layered_tableau_lemma(n),
              transpose_identities(n), layer_to_jog(n),        ascent_flip(n)};
    case Suite::Greene:
      return {greene_shape_agreement(n), record_breakers_first_column(n), jog_lower_bound(n)};
    case Suite::Characterization:
      return {perm_core_identities(n),
              layered_pattern_characterization(n),
              transposed_layer_iff_tight(n),
              layered_iff_dually_tight_involution(n),
              general_theorem(n),
              shape_multiset_law(n),
              gfk_tight_direct_agrees(n),
              avoiding_123_direct_agrees(n),
              two_row_round_trip(n),
              rev_shortcut_agrees(n)};
    case Suite::Counting:
      return {layered_count(n), count_formula_matches_brute_force(n), generalized_layered_distinct(n),
              exponential_bounds(n), composition_sum(n)};
    case Suite::All:
      break;
  }
  return {};
}

}  // namespace

std::vector<std::pair<Suite, std::vector<CheckResult>>> run_suites(Suite s, int max_n) {
  std::vector<std::pair<Suite, std::vector<CheckResult>>> out;
  const std::vector<Suite> which = s == Suite::All
                                       ? std::vector<Suite>{Suite::Rsk, Suite::Greene, Suite::Characterization, Suite::Counting}
                                       : std::vector<Suite>{s};
  for (Suite one : which) out.emplace_back(one, run_one(one, max_n));
  return out;
}

}  // namespace rsinv::verify
