#include "doctest.h"
#include "oracles.hpp"
#include "rsinv/enumeration.hpp"
#include "rsinv/error.hpp"
#include "rsinv/rsk.hpp"

using namespace rsinv;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

const Tableau kLayered{{{1, 3, 6}, {2, 4, 7}, {5, 8}, {9}}};
const Tableau kTransposed{{{1, 2, 5, 9}, {3, 4, 8}, {6, 7}}};

}  // namespace

TEST_CASE("row_insert") {
  auto a = row_inserted(Tableau{{{1, 2}}}, 3);
  CHECK(a.tableau == Tableau{{{1, 2, 3}}});
  CHECK(a.landing_row == 1);

  auto b = row_inserted(Tableau{{{1, 4}, {2}}}, 3);
  CHECK(b.tableau == Tableau{{{1, 3}, {2, 4}}});
  CHECK(b.landing_row == 2);

  Tableau t;
  for (int x = 1; x <= 5; ++x) CHECK(row_insert(t, x) == 1);
  CHECK(t == Tableau{{{1, 2, 3, 4, 5}}});

  // Partial tableaux with gaps in the entry set are fine.
  Tableau partial{{{10, 30}}};
  CHECK(row_insert(partial, 20) == 2);
  CHECK(partial == Tableau{{{10, 20}, {30}}});

  try {
    row_insert(t, 3);
    FAIL("expected DuplicateEntry");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateEntry);
  }
}

TEST_CASE("rsk worked examples") {
  const auto a = rsk(P("215439876"));
  CHECK(a.P == kLayered);
  CHECK(a.Q == kLayered);

  const auto b = rsk(Permutation::identity(4));
  CHECK(b.P == Tableau{{{1, 2, 3, 4}}});
  CHECK(b.Q == b.P);

  const auto c = rsk(P("673481259"));
  CHECK(c.P == kTransposed);
  CHECK(c.Q == kTransposed);

  CHECK(rsk(Permutation()) == TableauPair{});
}

TEST_CASE("rsk of a non-involution") {
  // 2413: P = [[1,3],[2,4]], Q = [[1,2],[3,4]] by hand.
  const auto pair = rsk(P("2413"));
  CHECK(pair.P == Tableau{{{1, 3}, {2, 4}}});
  CHECK(pair.Q == Tableau{{{1, 2}, {3, 4}}});
  CHECK(inverse_rsk(pair) == P("2413"));
}

TEST_CASE("inverse_rsk") {
  CHECK(inverse_rsk({kTransposed, kTransposed}) == P("673481259"));
  const Tableau column{{{1}, {2}, {3}, {4}, {5}}};
  CHECK(inverse_rsk({column, column}) == Permutation::decreasing(5));
  CHECK(inverse_rsk({}) == Permutation());

  try {
    inverse_rsk({Tableau{{{1, 2}}}, Tableau{{{1}, {2}}}});
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShapeMismatch);
  }
  try {
    inverse_rsk({Tableau{{{2, 1}}}, Tableau{{{1, 2}}}});
    FAIL("expected InvalidTableau");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidTableau);
  }
}

TEST_CASE("round trip over every permutation up to n = 7") {
  for (int n = 0; n <= 7; ++n) {
    PermutationStream perms(n);
    while (auto p = perms.next()) REQUIRE(inverse_rsk(rsk(*p)) == *p);
  }
}

TEST_CASE("tableau_of_involution") {
  CHECK(tableau_of_involution(P("215439876")) == kLayered);
  CHECK(tableau_of_involution(Permutation::identity(4)) == Tableau{{{1, 2, 3, 4}}});
  CHECK(tableau_of_involution(P("1325467")) == Tableau{{{1, 2, 4, 6, 7}, {3, 5}}});
  CHECK_THROWS_AS(tableau_of_involution(P("1342")), Error);
}

TEST_CASE("f_involution") {
  CHECK(f_involution(P("215439876")) == P("673481259"));
  CHECK(f_involution(P("6574213")) == P("1324576"));
  CHECK(f_involution(Permutation::identity(6)) == Permutation::decreasing(6));
  CHECK(f_involution(Permutation()) == Permutation());
  try {
    f_involution(P("1342"));
    FAIL("expected NotInvolution");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvolution);
  }
}

TEST_CASE("f_involution matches search by definition") {
  for (int n = 1; n <= 6; ++n) {
    InvolutionStream inv(n);
    while (auto p = inv.next()) REQUIRE(f_involution(*p) == oracle::f_by_search(*p));
  }
}
