#include "supchar/serialization.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace supchar {

using nlohmann::json;

json cyc_to_json(const CycNumber& value) {
  json out = json::array();
  for (const auto& c : value.coeffs()) out.push_back(rational_to_string(c));
  return out;
}

CycNumber cyc_from_json(unsigned prime, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("cyclotomic value must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (c.is_string()) {
      coeffs.push_back(parse_rational(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(static_cast<long>(c.get<std::int64_t>()));
    } else {
      throw std::invalid_argument("cyclotomic coefficient must be a string or an integer");
    }
  }
  return CycNumber::from_coeffs(prime, std::move(coeffs));
}

json pair_to_json(const RootSystem& rs, const BasicPair& pair) {
  json roots = json::array();
  for (auto idx : pair.roots) roots.push_back(root_to_string(rs.root(idx)));
  return {{"id", pair_to_string(rs, pair)}, {"roots", roots}, {"phi", pair.phi}};
}

BasicPair pair_from_json(const RootSystem& rs, const json& j) {
  BasicPair out;
  const auto& roots = j.at("roots");
  const auto& phi = j.at("phi");
  if (roots.size() != phi.size()) throw std::invalid_argument("roots and phi differ in length");
  std::vector<std::pair<std::size_t, FieldElement>> items;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    items.emplace_back(rs.root_index(parse_root(roots[k].get<std::string>())), phi[k].get<FieldElement>());
  }
  std::sort(items.begin(), items.end());
  for (const auto& [idx, value] : items) {
    out.roots.push_back(idx);
    out.phi.push_back(value);
  }
  if (!rs.is_basic(out.roots)) throw std::invalid_argument("root subset is not basic");
  return out;
}

json table_to_json(const SuperTable& table) {
  const RootSystem rs(table.family, table.n);
  json pairs = json::array();
  for (const auto& pair : table.pairs) pairs.push_back(pair_to_json(rs, pair));
  json sizes = json::array(), degrees = json::array(), norms = json::array(), values = json::array();
  for (const auto& s : table.sizes) sizes.push_back(s.get_str());
  for (const auto& d : table.degrees) degrees.push_back(d.get_str());
  for (const auto& nm : table.norms) norms.push_back(rational_to_string(nm));
  for (const auto& row : table.values) {
    json r = json::array();
    for (const auto& v : row) r.push_back(cyc_to_json(v));
    values.push_back(std::move(r));
  }
  return {{"family", std::string(1, family_letter(table.family))},
          {"n", table.n},
          {"p", table.p},
          {"e", table.e},
          {"modulus", table.modulus},
          {"group_order", table.group_order.get_str()},
          {"basic_pairs", pairs},
          {"sizes", sizes},
          {"degrees", degrees},
          {"norms", norms},
          {"values", values}};
}

std::string table_to_csv(const SuperTable& table) {
  const RootSystem rs(table.family, table.n);
  std::ostringstream os;
  os << "character,degree,norm";
  for (const auto& pair : table.pairs) os << ',' << pair_to_string(rs, pair);
  os << "\nsize,,";
  for (const auto& s : table.sizes) os << ',' << s.get_str();
  os << '\n';
  for (std::size_t r = 0; r < table.dimension(); ++r) {
    os << pair_to_string(rs, table.pairs[r]) << ',' << table.degrees[r].get_str() << ','
       << rational_to_string(table.norms[r]);
    for (const auto& v : table.values[r]) os << ',' << v.to_literal();
    os << '\n';
  }
  return os.str();
}

json report_to_json(const CheckReport& report) {
  json out = {{"suite", report.suite},
              {"instances", report.instances},
              {"passed", report.passed},
              {"failed", report.failed},
              {"status", report.status}};
  if (report.first_counterexample) out["first_counterexample"] = *report.first_counterexample;
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

json matrix_to_json(const GroupModel& g, const Matrix& x) {
  json rows = json::array();
  for (int r = 0; r < x.m; ++r) {
    json row = json::array();
    for (int c = 0; c < x.m; ++c) row.push_back(x.at(r, c));
    rows.push_back(std::move(row));
  }
  return {{"index", g.roots().indices()}, {"rows", rows}};
}

namespace {

FieldElement field_value(const GroupModel& g, const json& v) {
  if (!v.is_number_integer()) throw std::invalid_argument("field elements must be integers");
  const auto raw = v.get<std::int64_t>();
  if (raw < 0 || raw >= static_cast<std::int64_t>(g.field().q())) {
    throw std::invalid_argument("field element " + std::to_string(raw) + " is outside [0, q)");
  }
  return static_cast<FieldElement>(raw);
}

Coords coords_from_map(const GroupModel& g, const std::vector<std::pair<std::string, FieldElement>>& items) {
  Coords coords(g.rank(), 0);
  for (const auto& [name, value] : items) {
    const std::size_t idx = g.roots().root_index(parse_root(name));
    coords[idx] = value;
  }
  return coords;
}

}  // namespace

Matrix element_from_json(const GroupModel& g, const json& j) {
  if (!j.is_object()) throw std::invalid_argument("element must be a JSON object");
  if (j.contains("coords")) {
    const auto& map = j.at("coords");
    if (!map.is_object()) throw std::invalid_argument("coords must map root names to values");
    std::vector<std::pair<std::string, FieldElement>> items;
    for (const auto& [name, value] : map.items()) items.emplace_back(name, field_value(g, value));
    return g.group_from_coords(coords_from_map(g, items));
  }
  if (!j.contains("rows")) throw std::invalid_argument("element needs either \"rows\" or \"coords\"");
  if (j.contains("index") && j.at("index") != json(g.roots().indices())) {
    throw std::invalid_argument("index list does not match the mirror order of this group");
  }
  const auto& rows = j.at("rows");
  const int m = g.m();
  if (!rows.is_array() || static_cast<int>(rows.size()) != m) {
    throw std::invalid_argument("matrix must have " + std::to_string(m) + " rows");
  }
  Matrix x(m);
  for (int r = 0; r < m; ++r) {
    if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != m) {
      throw std::invalid_argument("matrix row " + std::to_string(r) + " must have " + std::to_string(m) + " entries");
    }
    for (int c = 0; c < m; ++c) x.at(r, c) = field_value(g, rows[r][c]);
  }
  return x;
}

Coords coords_from_text(const GroupModel& g, const std::string& text) {
  std::vector<std::pair<std::string, FieldElement>> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("coordinate '" + item + "' must be root=value");
    const std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || value.empty() || v < 0 || v >= static_cast<long long>(g.field().q())) {
      throw std::invalid_argument("coordinate value '" + value + "' is not an integer in [0, q)");
    }
    items.emplace_back(item.substr(0, eq), static_cast<FieldElement>(v));
  }
  return coords_from_map(g, items);
}

}  // namespace supchar
