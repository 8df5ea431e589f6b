// Acceptance suite: one line per criterion, exact equality throughout.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "rsinv/direct_maps.hpp"
#include "rsinv/enumeration.hpp"
#include "rsinv/greene.hpp"
#include "rsinv/rsk.hpp"
#include "rsinv/verify.hpp"

using namespace rsinv;
using rsinv::verify::CheckResult;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

struct Criterion {
  std::string title;
  std::function<std::vector<CheckResult>()> run;
};

CheckResult fact(const std::string& name, const std::function<bool()>& body) {
  CheckResult r{name};
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    r.expect(false, e.what());
    return r;
  }
  r.expect(ok, name);
  return r;
}

std::vector<Criterion> criteria() {
  using namespace rsinv::verify;
  return {
      {"1. f(215439876) = 673481259 and its tableau is [[1,3,6],[2,4,7],[5,8],[9]]",
       [] {
         return std::vector{fact("worked example", [] {
           const Tableau expected{{{1, 3, 6}, {2, 4, 7}, {5, 8}, {9}}};
           const auto pair = rsk(P("215439876"));
           return f_involution(P("215439876")) == P("673481259") && pair.P == expected && pair.Q == expected;
         })};
       }},
      {"2. f(6574213) = 1324576, record-breakers {1,2,4,5,6}",
       [] {
         return std::vector{fact("worked example", [] {
           return f_involution(P("6574213")) == P("1324576") &&
                  f_123_avoiding_direct(P("6574213")) == P("1324576") &&
                  record_breakers(P("6574213")) == std::vector<int>{1, 2, 4, 5, 6};
         })};
       }},
      {"3. recover_321_avoiding([[1,2,4,6,7],[3,5]]) = 1325467",
       [] {
         return std::vector{fact("worked example", [] {
           return recover_321_avoiding(Tableau{{{1, 2, 4, 6, 7}, {3, 5}}}) == P("1325467");
         })};
       }},
      {"4. f(f(p)) = p for every involution, n <= 8 (764 at n = 8)",
       [] {
         return std::vector{f_is_involution(8),
                            fact("764 involutions of length 8", [] { return collect(InvolutionStream(8)).size() == 764; })};
       }},
      {"5. tableaux of layered permutations = layered tableaux, 2^(n-1) each, n <= 8",
       [] { return std::vector{layered_tableau_lemma(8)}; }},
      {"6. transposed layer condition <=> GFK-tight, all involutions n <= 8",
       [] { return std::vector{transposed_layer_iff_tight(8)}; }},
      {"7. layered <=> dually GFK-tight involution, all permutations n <= 8",
       [] { return std::vector{layered_iff_dually_tight_involution(8)}; }},
      {"8. shape prefix sums = oracle k-increasing / k-decreasing, n <= 7, all k",
       [] { return std::vector{greene_shape_agreement(7)}; }},
      {"9. descent transport and rsk(p^-1) = (Q, P), n <= 7",
       [] { return std::vector{descent_transport(7), schutzenberger_symmetry(7)}; }},
      {"10. layer-to-jog transport and ascent flip, n <= 8",
       [] { return std::vector{layer_to_jog(8), ascent_flip(8)}; }},
      {"11. (A) <=> (B) both forms, counts = count_A = brute_count_general, n <= 7",
       [] {
         return std::vector{general_theorem(7), count_formula_matches_brute_force(7),
                            fact("count_A(3) = 6, count_A(4) = 16", [] { return count_A(3) == 6 && count_A(4) == 16; })};
       }},
      {"12. direct maps agree with RS-based f on their domains",
       [] {
         return std::vector{gfk_tight_direct_agrees(8), avoiding_123_direct_agrees(10), two_row_round_trip(10),
                            rev_shortcut_agrees(8)};
       }},
      {"13. p(n) A_n >= 4^(n-1) >= A_n and sum comp(h) = 2^(n-1), n <= 12",
       [] { return std::vector{exponential_bounds(12), composition_sum(12)}; }},
  };
}

}  // namespace

int main() {
  if (oracle_cap() < 8) {
    std::cout << "FAIL  RSINV_MAX_N lowers the oracle cap below 8; acceptance needs the full range\n";
    return 1;
  }
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria()) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = c.run();
    bool ok = true;
    std::uint64_t instances = 0;
    std::string detail;
    for (const auto& r : results) {
      ok = ok && r.passed();
      instances += r.instances;
      if (!r.passed() && detail.empty()) detail = r.name + ": " + r.first_failure;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (ok ? "PASS  " : "FAIL  ") << c.title << "  [" << instances << " instances, " << secs << " s]";
    if (!ok) std::cout << "  first failure: " << detail;
    std::cout << '\n';
    failed += ok ? 0 : 1;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failed == 0 ? "ALL CRITERIA PASSED" : std::to_string(failed) + " CRITERIA FAILED") << " in " << total
            << " s\n";
  return failed == 0 ? 0 : 1;
}
