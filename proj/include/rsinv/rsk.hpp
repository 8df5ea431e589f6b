#pragma once

#include "rsinv/permutation.hpp"
#include "rsinv/tableau.hpp"

namespace rsinv {

/// Insertion tableau P and recording tableau Q of equal shape.
struct TableauPair {
  Tableau P;
  Tableau Q;

  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

/// Schensted row insertion of x into a tableau with increasing rows and
/// columns (any entry set). Returns the 1-based row where a cell was created.
/// Throws Error(DuplicateEntry) if x is already present.
int row_insert(Tableau& t, int x);

struct InsertResult {
  Tableau tableau;
  int landing_row;
};

InsertResult row_inserted(Tableau t, int x);

TableauPair rsk(const Permutation& p);

/// Reverse bumping, removing Q's entries n, n-1, ..., 1.
/// Throws Error(InvalidTableau) or Error(ShapeMismatch).
Permutation inverse_rsk(const TableauPair& pair);

/// P(p) = Q(p) for an involution. Throws Error(NotInvolution).
Tableau tableau_of_involution(const Permutation& p);

/// Transpose the tableau of an involution and map back. Throws Error(NotInvolution).
Permutation f_involution(const Permutation& p);

}  // namespace rsinv
