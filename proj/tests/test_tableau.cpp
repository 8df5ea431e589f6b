#include "doctest.h"
#include "rsinv/error.hpp"
#include "rsinv/tableau.hpp"

using namespace rsinv;

namespace {

const Tableau kLayered{{{1, 3, 6}, {2, 4, 7}, {5, 8}, {9}}};
const Tableau kTransposed{{{1, 2, 5, 9}, {3, 4, 8}, {6, 7}}};

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(kLayered));
  CHECK(validate(kTransposed));
  CHECK_FALSE(validate(Tableau{{{2, 1}}}));
  CHECK_FALSE(validate(Tableau{{{1, 2}, {2}}}));
  CHECK_FALSE(validate(Tableau{{{1}, {2, 3}}}));       // rows grow
  CHECK_FALSE(validate(Tableau{{{2, 3}, {1}}}));       // column decreases
  CHECK_FALSE(validate(Tableau{{{1, 2}, {}}}));        // empty row
  CHECK_FALSE(validate(Tableau{{{1, 4}}}));            // not 1..n
  CHECK(validate(Tableau{}));
}

TEST_CASE("transpose") {
  CHECK(transpose(kLayered) == kTransposed);
  CHECK(transpose(Tableau{{{1, 2, 3}}}) == Tableau{{{1}, {2}, {3}}});
  CHECK(transpose(transpose(kLayered)) == kLayered);
  CHECK(transpose(Tableau{}) == Tableau{});
}

TEST_CASE("tableau_descents") {
  CHECK(tableau_descents(kTransposed) == std::vector<int>{2, 5});
  CHECK(tableau_descents(Tableau{{{1, 2, 3, 4}}}).empty());
  CHECK(tableau_descents(Tableau{{{1}, {2}, {3}}}) == std::vector<int>{1, 2});
}

TEST_CASE("layer conditions") {
  CHECK(is_layered_tableau(kLayered));
  CHECK_FALSE(is_layered_tableau(kTransposed));
  CHECK(is_layered_tableau(Tableau{{{1, 2, 3}}}));
  CHECK(is_layered_tableau(Tableau{{{1}, {2}, {3}}}));
  CHECK(is_layered_tableau(Tableau{}));

  CHECK(satisfies_transposed_layer(kTransposed));
  CHECK_FALSE(satisfies_transposed_layer(kLayered));
  CHECK(satisfies_transposed_layer(Tableau{{{1}, {2}, {3}}}));
  CHECK(satisfies_transposed_layer(Tableau{}));
}

TEST_CASE("shape and conjugate") {
  CHECK(shape(kLayered) == Shape{{3, 3, 2, 1}});
  CHECK(conjugate(Shape{{3, 3, 2, 1}}) == Shape{{4, 3, 2}});
  CHECK(conjugate(conjugate(Shape{{5, 2, 2, 1}})) == Shape{{5, 2, 2, 1}});
  CHECK(conjugate(Shape{}) == Shape{});
  CHECK(shape(transpose(kLayered)) == conjugate(shape(kLayered)));
}

TEST_CASE("tableau JSON") {
  CHECK(to_json(kLayered) == R"({"rows":[[1,3,6],[2,4,7],[5,8],[9]]})");
  CHECK(tableau_from_json(R"({"rows":[[1,3,6],[2,4,7],[5,8],[9]]})") == kLayered);
  CHECK(tableau_from_json(R"( { "rows" : [ [1, 2], [3] ] } )") == Tableau{{{1, 2}, {3}}});
  CHECK(to_json(Tableau{}) == R"({"rows":[]})");
  // Parsed but not validated.
  CHECK(tableau_from_json(R"({"rows":[[2,1]]})") == Tableau{{{2, 1}}});
  for (const char* bad : {"{", "[]", R"({"rows":[[1]],"x":1})", R"({"rows":[1]})", R"({"rows":[["a"]]})",
                          R"({"cols":[[1]]})", R"({"rows":[[1.5]]})"}) {
    CAPTURE(bad);
    try {
      tableau_from_json(bad);
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
}
