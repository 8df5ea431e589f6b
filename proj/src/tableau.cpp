#include "rsinv/tableau.hpp"

#include <algorithm>

#include "json.hpp"
#include "rsinv/error.hpp"

namespace rsinv {

int Shape::size() const {
  int n = 0;
  for (int r : rows) n += r;
  return n;
}

Shape conjugate(const Shape& s) {
  Shape c;
  const int width = s.rows.empty() ? 0 : s.rows.front();
  for (int i = 1; i <= width; ++i) {
    c.rows.push_back(static_cast<int>(std::count_if(s.rows.begin(), s.rows.end(), [i](int r) { return r >= i; })));
  }
  return c;
}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.size());
  return n;
}

bool validate(const Tableau& t) {
  const int n = t.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row.empty()) return false;
    if (r > 0 && row.size() > t.rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const int v = row[c];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
      if (c > 0 && row[c - 1] >= v) return false;
      if (r > 0 && t.rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

Shape shape(const Tableau& t) {
  Shape s;
  for (const auto& r : t.rows) s.rows.push_back(static_cast<int>(r.size()));
  return s;
}

Tableau transpose(const Tableau& t) {
  Tableau out;
  if (t.rows.empty()) return out;
  out.rows.resize(t.rows.front().size());
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out.rows[c].push_back(row[c]);
  }
  return out;
}

std::vector<Cell> locate(const Tableau& t) {
  std::vector<Cell> cells(static_cast<std::size_t>(t.size()));
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      cells[static_cast<std::size_t>(t.rows[r][c] - 1)] = {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
    }
  }
  return cells;
}

std::vector<int> tableau_descents(const Tableau& t) {
  const auto cells = locate(t);
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    if (cells[i + 1].row > cells[i].row) d.push_back(static_cast<int>(i) + 1);
  }
  return d;
}

bool is_layered_tableau(const Tableau& t) {
  const auto cells = locate(t);
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    const int next = cells[i + 1].row;
    if (next != 1 && next != cells[i].row + 1) return false;
  }
  return true;
}

bool satisfies_transposed_layer(const Tableau& t) {
  const auto cells = locate(t);
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    const int next = cells[i + 1].col;
    if (next != 1 && next != cells[i].col + 1) return false;
  }
  return true;
}

std::string to_json(const Tableau& t) {
  nlohmann::json j;
  j["rows"] = t.rows;
  return j.dump();
}

Tableau tableau_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object() || j.size() != 1 || !j.contains("rows") || !j["rows"].is_array()) {
    throw Error(ErrorCode::ParseError, "expected an object with the single key \"rows\"");
  }
  Tableau t;
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) throw Error(ErrorCode::ParseError, "each row must be a list");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "entries must be integers");
      r.push_back(v.get<int>());
    }
    t.rows.push_back(std::move(r));
  }
  return t;
}

}  // namespace rsinv
