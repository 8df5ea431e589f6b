#include "doctest.h"
#include "oracles.hpp"
#include "rsinv/direct_maps.hpp"
#include "rsinv/error.hpp"
#include "rsinv/rsk.hpp"

using namespace rsinv;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

template <typename Fn>
ErrorCode code_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("f_rev_shortcut") {
  CHECK(f_rev_shortcut(P("321")) == P("123"));
  CHECK(f_rev_shortcut(P("2143")) == P("3412"));
  CHECK(f_rev_shortcut(P("2143")) == f_involution(P("2143")));
  CHECK(f_rev_shortcut(P("1")) == P("1"));
  // 132 is an involution but 231 is not.
  CHECK(code_of([] { f_rev_shortcut(P("132")); }) == ErrorCode::ShortcutInapplicable);
  CHECK(code_of([] { f_rev_shortcut(P("231")); }) == ErrorCode::ShortcutInapplicable);
}

TEST_CASE("f_gfk_tight_direct") {
  CHECK(f_gfk_tight_direct(P("673481259")) == P("215439876"));
  CHECK(f_gfk_tight_direct(P("12")) == P("21"));
  CHECK(f_gfk_tight_direct(P("21")) == P("12"));
  CHECK(f_gfk_tight_direct(P("12")) == oracle::f_by_search(P("12")));
  CHECK(f_gfk_tight_direct(P("21")) == oracle::f_by_search(P("21")));
  CHECK(f_gfk_tight_direct(Permutation::identity(6)) == Permutation::decreasing(6));
  CHECK(code_of([] { f_gfk_tight_direct(P("1342")); }) == ErrorCode::NotInvolution);
  // 215439876 is layered, its tableau is not transposed-layered.
  CHECK(code_of([] { f_gfk_tight_direct(P("215439876")); }) == ErrorCode::NotGfkTight);
}

TEST_CASE("tableau_of_321_avoiding") {
  CHECK(tableau_of_321_avoiding(P("1325467")) == Tableau{{{1, 2, 4, 6, 7}, {3, 5}}});
  CHECK(tableau_of_321_avoiding(Permutation::identity(4)) == Tableau{{{1, 2, 3, 4}}});
  CHECK(tableau_of_321_avoiding(P("21")) == Tableau{{{1}, {2}}});
  CHECK(tableau_of_321_avoiding(Permutation()) == Tableau{});
  CHECK(code_of([] { tableau_of_321_avoiding(P("321")); }) == ErrorCode::Not321Avoiding);
  CHECK(code_of([] { tableau_of_321_avoiding(P("231")); }) == ErrorCode::NotInvolution);
}

TEST_CASE("recover_321_avoiding") {
  CHECK(recover_321_avoiding(Tableau{{{1, 2, 4, 6, 7}, {3, 5}}}) == P("1325467"));
  CHECK(recover_321_avoiding(Tableau{{{1}, {2}}}) == P("21"));
  CHECK(recover_321_avoiding(Tableau{{{1, 3}, {2, 4}}}) == P("2143"));
  CHECK(rsk(P("2143")).P == Tableau{{{1, 3}, {2, 4}}});
  CHECK(recover_321_avoiding(Tableau{}) == Permutation());
  CHECK(code_of([] { recover_321_avoiding(Tableau{{{1}, {2}, {3}}}); }) == ErrorCode::TooManyRows);
  CHECK(code_of([] { recover_321_avoiding(Tableau{{{2, 1}}}); }) == ErrorCode::InvalidTableau);
}

TEST_CASE("f_123_avoiding_direct") {
  CHECK(f_123_avoiding_direct(P("6574213")) == P("1324576"));
  CHECK(f_123_avoiding_direct(Permutation::decreasing(7)) == Permutation::identity(7));
  CHECK(f_123_avoiding_direct(P("213")) == P("132"));
  CHECK(f_123_avoiding_direct(P("213")) == oracle::f_by_search(P("213")));
  CHECK(code_of([] { f_123_avoiding_direct(P("123")); }) == ErrorCode::Not123Avoiding);
  CHECK(code_of([] { f_123_avoiding_direct(P("312")); }) == ErrorCode::NotInvolution);
}

TEST_CASE("layered_from_lengths") {
  CHECK(layered_from_lengths({2, 3, 4}) == P("215439876"));
  CHECK(layered_from_lengths({}) == Permutation());
  CHECK_THROWS_AS(layered_from_lengths({0}), Error);
}
