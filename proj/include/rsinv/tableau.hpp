#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace rsinv {

/// Weakly decreasing positive row lengths.
struct Shape {
  std::vector<int> rows;

  int size() const;

  friend auto operator<=>(const Shape&, const Shape&) = default;
  friend bool operator==(const Shape&, const Shape&) = default;
};

Shape conjugate(const Shape& s);

using Rows = std::vector<std::vector<int>>;

/// Left-justified rows of integers, stored top to bottom.
///
/// The type does not enforce standardness: RS insertion builds partial
/// tableaux, and file input must be screened with validate() first. Every
/// operation below other than validate() expects a valid standard tableau.
struct Tableau {
  Rows rows;

  int size() const;
  int row_count() const { return static_cast<int>(rows.size()); }

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

/// Row/column (both 1-based) of an entry.
struct Cell {
  int row = 0;
  int col = 0;
};

/// True iff row lengths form a Shape, the entries are exactly 1..n and they
/// increase strictly along rows and down columns. Never throws.
bool validate(const Tableau& t);

Shape shape(const Tableau& t);
Tableau transpose(const Tableau& t);

/// cells[v - 1] is the location of entry v.
std::vector<Cell> locate(const Tableau& t);

/// Entries i such that i + 1 lies in a strictly lower row.
std::vector<int> tableau_descents(const Tableau& t);

/// Every i + 1 sits in the row directly below i, or in the top row.
bool is_layered_tableau(const Tableau& t);

/// Every i + 1 sits in the first column, or in the column just right of i.
bool satisfies_transposed_layer(const Tableau& t);

/// {"rows":[[1,3,6],[2,4,7],[5,8],[9]]}
std::string to_json(const Tableau& t);
/// Throws Error(ParseError) on malformed JSON or a wrong schema. The result is
/// not validated.
Tableau tableau_from_json(std::string_view text);

}  // namespace rsinv
