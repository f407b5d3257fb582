#include "gwtqft/io.hpp"

#include <algorithm>
#include <sstream>

#include "gwtqft/error.hpp"

namespace gwtqft {

Json series_to_json(const Series& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError(0, "series coefficient must be a fraction string or an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(0, std::string("missing field '") + name + "'");
  return j.at(name);
}

std::vector<Series> series_list(const Json& j, std::size_t expected, const char* what) {
  if (!j.is_array() || j.size() != expected)
    throw ParseError(0, std::string(what) + " must be an array of " + std::to_string(expected) + " series");
  std::vector<Series> out;
  for (const auto& s : j) out.push_back(series_from_json(s));
  return out;
}

}  // namespace

Series series_from_json(const Json& j) {
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array() || coeffs.empty()) throw ParseError(0, "coeffs must be a nonempty array");
  std::vector<Rational> c;
  for (const auto& x : coeffs) c.push_back(rational_from_json(x));
  if (j.contains("order")) {
    const auto declared = j.at("order").get<std::size_t>();
    if (declared != c.size())
      throw ParseError(0, "series declares order " + std::to_string(declared) + " but lists " +
                              std::to_string(c.size()) + " coefficients");
  }
  return Series(std::move(c));
}

Json algebra_to_json(const FrobeniusAlgebra& a) {
  const std::size_t n = a.rank();
  Json mult = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Json cell = Json::array();
      for (std::size_t k = 0; k < n; ++k) cell.push_back(series_to_json(a.mult(i, j, k)));
      row.push_back(std::move(cell));
    }
    mult.push_back(std::move(row));
  }
  Json unit = element_to_json(a.unit());
  Json co = Json::array();
  for (std::size_t i = 0; i < n; ++i) co.push_back(series_to_json(a.counit(i)));
  return Json{{"rank", n},        {"order", a.order()},   {"labels", a.labels()},
              {"mult", std::move(mult)}, {"unit", std::move(unit)}, {"counit", std::move(co)}};
}

FrobeniusAlgebra algebra_from_json(const Json& j) {
  const std::size_t n = field(j, "rank").get<std::size_t>();
  const std::size_t order = field(j, "order").get<std::size_t>();
  auto labels = field(j, "labels").get<std::vector<std::string>>();
  if (labels.size() != n) throw ParseError(0, "labels must list " + std::to_string(n) + " names");
  const Json& mult = field(j, "mult");
  std::vector<Series> m;
  if (!mult.is_array() || mult.size() != n) throw ParseError(0, "mult must be an n x n x n array");
  for (const auto& row : mult) {
    if (!row.is_array() || row.size() != n) throw ParseError(0, "mult must be an n x n x n array");
    for (const auto& cell : row)
      for (auto& s : series_list(cell, n, "mult entry")) m.push_back(std::move(s));
  }
  auto unit = series_list(field(j, "unit"), n, "unit");
  auto co = series_list(field(j, "counit"), n, "counit");
  FrobeniusAlgebra a(std::move(labels), std::move(m), std::move(unit), std::move(co));
  if (a.order() != order) throw ParseError(0, "algebra declares order " + std::to_string(order) + " but series differ");
  return a;
}

Json element_to_json(const AlgebraElement& x) {
  Json out = Json::array();
  for (const auto& s : x.coords()) out.push_back(series_to_json(s));
  return out;
}

AlgebraElement element_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError(0, "algebra element must be a nonempty array of series");
  return AlgebraElement(series_list(j, j.size(), "algebra element"));
}

Json character_table_to_json(const CharacterTable& table) {
  Json order = Json::array();
  for (const auto& p : table.order) order.push_back(p.label());
  return Json{{"d", table.d}, {"order", std::move(order)}, {"values", table.values}};
}

std::string series_to_text(const Series& s) {
  std::vector<std::string> keys, values;
  for (std::size_t i = 0; i < s.order(); ++i) {
    keys.push_back("t^" + std::to_string(i));
    values.push_back(to_string(s[i]));
  }
  std::size_t width = 0;
  for (const auto& k : keys) width = std::max(width, k.size());
  std::ostringstream out;
  for (std::size_t i = 0; i < keys.size(); ++i)
    out << std::string(width - keys[i].size(), ' ') << keys[i] << " : " << values[i] << '\n';
  return out.str();
}

namespace {

std::string grid(const std::vector<std::string>& row_labels, const std::vector<std::string>& col_labels,
                 const std::vector<std::vector<std::string>>& cells) {
  std::size_t row_width = 0;
  for (const auto& l : row_labels) row_width = std::max(row_width, l.size());
  std::vector<std::size_t> widths(col_labels.size());
  for (std::size_t c = 0; c < col_labels.size(); ++c) {
    widths[c] = col_labels[c].size();
    for (const auto& row : cells) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream out;
  out << std::string(row_width, ' ');
  for (std::size_t c = 0; c < col_labels.size(); ++c)
    out << "  " << std::string(widths[c] - col_labels[c].size(), ' ') << col_labels[c];
  out << '\n';
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    out << row_labels[r] << std::string(row_width - row_labels[r].size(), ' ');
    for (std::size_t c = 0; c < col_labels.size(); ++c)
      out << "  " << std::string(widths[c] - cells[r][c].size(), ' ') << cells[r][c];
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string character_table_to_text(const CharacterTable& table) {
  std::vector<std::string> labels;
  for (const auto& p : table.order) labels.push_back(p.label());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : table.values) {
    std::vector<std::string> r;
    for (long v : row) r.push_back(std::to_string(v));
    cells.push_back(std::move(r));
  }
  return grid(labels, labels, cells);
}

std::string tensor_to_text(const RelativeTensor& t) {
  const auto& parts = enumerate_partitions(t.degree());
  bool constant = true;
  for (std::size_t f = 0; f < t.entry_count(); ++f) constant = constant && t.flat_entry(f).is_constant();
  auto cell = [&](const Series& s) { return constant ? to_string(s[0]) : to_string(s); };
  std::vector<std::string> labels;
  for (const auto& p : parts) labels.push_back(p.label());

  if (t.arity() == 0) return cell(t.scalar()) + '\n';
  if (t.arity() == 2) {
    std::vector<std::vector<std::string>> cells(labels.size(), std::vector<std::string>(labels.size()));
    for (std::size_t f = 0; f < t.entry_count(); ++f) {
      const auto idx = t.unflat(f);
      cells[idx[0]][idx[1]] = cell(t.flat_entry(f));
    }
    return grid(labels, labels, cells);
  }
  std::ostringstream out;
  for (std::size_t f = 0; f < t.entry_count(); ++f) {
    const auto idx = t.unflat(f);
    for (std::size_t k = 0; k < idx.size(); ++k) out << (k ? " " : "") << labels[idx[k]];
    out << " : " << cell(t.flat_entry(f)) << '\n';
  }
  return out.str();
}

}  // namespace gwtqft
