#include "rsinv/rsk.hpp"

#include <algorithm>

#include "rsinv/error.hpp"

namespace rsinv {

namespace {

// Bumps x down through the rows; no duplicate check.
int bump(Rows& rows, int x) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({x});
      return static_cast<int>(r) + 1;
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return static_cast<int>(r) + 1;
    }
    std::swap(x, *it);
  }
}

}  // namespace

int row_insert(Tableau& t, int x) {
  for (const auto& row : t.rows) {
    if (std::find(row.begin(), row.end(), x) != row.end()) {
      throw Error(ErrorCode::DuplicateEntry, std::to_string(x) + " is already in the tableau");
    }
  }
  return bump(t.rows, x);
}

InsertResult row_inserted(Tableau t, int x) {
  const int row = row_insert(t, x);
  return {std::move(t), row};
}

TableauPair rsk(const Permutation& p) {
  TableauPair out;
  for (int i = 1; i <= p.size(); ++i) {
    const int r = bump(out.P.rows, p(i));
    if (static_cast<std::size_t>(r) > out.Q.rows.size()) out.Q.rows.emplace_back();
    out.Q.rows[static_cast<std::size_t>(r - 1)].push_back(i);
  }
  return out;
}

Permutation inverse_rsk(const TableauPair& pair) {
  if (!validate(pair.P)) throw Error(ErrorCode::InvalidTableau, "P is not a standard tableau");
  if (!validate(pair.Q)) throw Error(ErrorCode::InvalidTableau, "Q is not a standard tableau");
  if (shape(pair.P) != shape(pair.Q)) throw Error(ErrorCode::ShapeMismatch, "P and Q differ in shape");

  Rows rows = pair.P.rows;
  const auto cells = locate(pair.Q);
  const int n = pair.Q.size();
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    // Entry k of a standard Q always sits at a corner, i.e. at its row's end.
    auto r = static_cast<std::size_t>(cells[static_cast<std::size_t>(k - 1)].row - 1);
    int x = rows[r].back();
    rows[r].pop_back();
    if (rows[r].empty()) rows.pop_back();
    while (r-- > 0) {
      auto& row = rows[r];
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;  // largest entry smaller than x
      std::swap(x, *it);
    }
    values[static_cast<std::size_t>(k - 1)] = x;
  }
  return Permutation(std::move(values));
}

Tableau tableau_of_involution(const Permutation& p) {
  if (!is_involution(p)) throw Error(ErrorCode::NotInvolution, p.to_string());
  return rsk(p).P;
}

Permutation f_involution(const Permutation& p) {
  const Tableau t = transpose(tableau_of_involution(p));
  return inverse_rsk({t, t});
}

}  // namespace rsinv
