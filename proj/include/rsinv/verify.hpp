#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Exhaustive invariant checks. Each check sweeps every instance up to its size
// bound and records how many instances it looked at and which ones failed.
// The CLI verify subcommand and the acceptance suite are both built on these.

namespace rsinv::verify {

struct CheckResult {
  explicit CheckResult(std::string check_name = {}) : name(std::move(check_name)) {}

  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && instances > 0; }
  void expect(bool ok, const std::string& what);
};

// perm-core
CheckResult perm_core_identities(int max_n);
CheckResult layered_pattern_characterization(int max_n);
CheckResult layered_count(int max_n);

// tableau-core / rsk-engine
CheckResult f_is_involution(int max_n);
CheckResult rsk_round_trip(int max_n);
CheckResult schutzenberger_symmetry(int max_n);
CheckResult reversal_transposes(int max_n);
CheckResult descent_transport(int max_n);
CheckResult layered_tableau_lemma(int max_n);
CheckResult transpose_identities(int max_n);
CheckResult layer_to_jog(int max_n);
CheckResult ascent_flip(int max_n);

// greene-oracle
CheckResult greene_shape_agreement(int max_n);
CheckResult record_breakers_first_column(int max_n);
CheckResult jog_lower_bound(int max_n);

// characterizations
CheckResult transposed_layer_iff_tight(int max_n);
CheckResult layered_iff_dually_tight_involution(int max_n);
CheckResult general_theorem(int max_n);
CheckResult shape_multiset_law(int max_n);

// direct-maps
CheckResult gfk_tight_direct_agrees(int max_n);
CheckResult avoiding_123_direct_agrees(int max_n);
CheckResult two_row_round_trip(int max_n);
CheckResult rev_shortcut_agrees(int max_n);

// enumeration
CheckResult count_formula_matches_brute_force(int max_n);
CheckResult generalized_layered_distinct(int max_n);
CheckResult exponential_bounds(int max_n);
CheckResult composition_sum(int max_n);

enum class Suite { All, Rsk, Greene, Characterization, Counting };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

/// The suites named by `s` (All expands to every suite), each run with every
/// size bound set to max_n. Checks driven by the subset oracle or the brute
/// counter are additionally clamped to their caps.
std::vector<std::pair<Suite, std::vector<CheckResult>>> run_suites(Suite s, int max_n);

}  // namespace rsinv::verify
