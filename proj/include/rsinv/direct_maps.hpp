#pragma once

#include "rsinv/permutation.hpp"
#include "rsinv/tableau.hpp"

// Constructions of the transpose involution and of involution tableaux that
// work on the permutation alone, without RS insertion. Each one is only
// defined on a subclass of involutions and rejects inputs outside it.

namespace rsinv {

/// reverse(p), valid when both p and reverse(p) are involutions.
/// Throws Error(ShortcutInapplicable) otherwise.
Permutation f_rev_shortcut(const Permutation& p);

/// The layered permutation whose layers are the jogs of p.
/// Throws Error(NotInvolution) or Error(NotGfkTight).
Permutation f_gfk_tight_direct(const Permutation& p);

/// Layered permutation with the given layer lengths, in order.
Permutation layered_from_lengths(const std::vector<int>& lengths);

/// Row 1 holds fixed points and small entries, row 2 the large entries.
/// Throws Error(NotInvolution) or Error(Not321Avoiding).
Tableau tableau_of_321_avoiding(const Permutation& p);

/// Peels the current maximum: in row 1 it is a fixed point, in row 2 it pairs
/// with the current maximum of row 1.
/// Throws Error(InvalidTableau) or Error(TooManyRows).
Permutation recover_321_avoiding(const Tableau& t);

/// Record-breakers go to row 1, everything else to row 2, then recover.
/// Throws Error(NotInvolution), Error(Not123Avoiding), or Error(InvalidTableau)
/// if the two-row tableau comes out non-standard.
Permutation f_123_avoiding_direct(const Permutation& p);

}  // namespace rsinv
