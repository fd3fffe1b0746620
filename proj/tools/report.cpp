#include "report.hpp"

#include <sstream>

#include "wsc/domains.hpp"

namespace wsc::report {

json to_json(const Subset& s) { return s.elements(); }

json lr_json(const Subset& s) { return lr_labels(s); }

json to_json(const Collection& c) {
  json out = json::array();
  for (const Subset& s : c) out.push_back(to_json(s));
  return out;
}

json to_json(const std::vector<Subset>& sets) {
  json out = json::array();
  for (const Subset& s : sets) out.push_back(to_json(s));
  return out;
}

json to_json(const PurityReport& r) {
  json sizes = json::object();
  for (const auto& [size, count] : r.clique_sizes) sizes[std::to_string(size)] = count;
  json out = {{"domain_size", r.domain_size}, {"clique_sizes", sizes}, {"is_pure", r.is_pure}};
  out["rank"] = r.rank ? json(*r.rank) : json(nullptr);
  if (r.clique_count) out["clique_count"] = *r.clique_count;
  return out;
}

json to_json(const DecoratedPermutation& p) {
  json colors = json::object();
  for (const auto& [point, colour] : p.colors()) colors[std::to_string(point)] = colour;
  return {{"perm", p.one_line()}, {"colors", colors}};
}

json to_json(const GrassmannNecklace& nk) { return to_json(nk.sets()); }

json to_json(const SquareMove& m) { return {{"remove", to_json(m.from)}, {"add", to_json(m.to)}}; }

json to_json(const LatticeVec4& v) { return v.x; }

json to_json(const P4Counts& c) {
  return {{"p", c.p},
          {"normalized", c.normalized},
          {"k", c.k},
          {"z_count", c.z_count},
          {"z_formula", c.z_formula},
          {"pq_interior", c.interior_pq_count},
          {"pq_interior_integral", c.integral_interior_pq_count},
          {"cuboid_formula", c.cuboid_formula},
          {"match", c.matches()}};
}

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "jsonl") return Format::jsonl;
  if (text == "csv") return Format::csv;
  throw InvalidInput("unknown format '" + std::string(text) + "' (expected json, jsonl or csv)");
}

namespace {

std::string csv_cell(const json& v) {
  if (v.is_array()) {
    std::string out;
    for (const json& e : v) {
      if (!out.empty()) out += ' ';
      out += e.is_string() ? e.get<std::string>() : e.dump();
    }
    return out;
  }
  std::string text = v.is_string() ? v.get<std::string>() : v.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

}  // namespace

std::string emit(const Report& r, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json:
      out << r.doc.dump(2) << '\n';
      break;
    case Format::jsonl:
      if (r.rows) {
        for (const json& row : *r.rows) out << row.dump() << '\n';
      } else {
        out << r.doc.dump() << '\n';
      }
      break;
    case Format::csv:
      if (r.rows) {
        for (const json& row : *r.rows) out << csv_cell(row) << '\n';
      } else {
        out << "key,value\n";
        for (const auto& [key, value] : r.doc.items()) out << key << ',' << csv_cell(value) << '\n';
      }
      break;
  }
  return out.str();
}

}  // namespace wsc::report
