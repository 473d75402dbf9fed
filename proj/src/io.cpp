#include "lalg/io.hpp"

#include <fstream>
#include <sstream>

namespace lalg {

using nlohmann::json;
using nlohmann::ordered_json;

const char* parse_code_name(parse_code c) {
  switch (c) {
    case parse_code::json_syntax: return "json-syntax";
    case parse_code::document_shape: return "document-shape";
    case parse_code::size_value: return "size-value";
    case parse_code::unit_range: return "unit-range";
    case parse_code::entry_range: return "entry-range";
  }
  return "?";
}

AlgebraDocument parse_algebra(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(parse_code::json_syntax, "byte " + std::to_string(e.byte), e.what());
  }
  if (!j.is_object()) throw parse_error(parse_code::document_shape, "$", "expected an object");
  for (const char* field : {"size", "unit", "table"})
    if (!j.contains(field))
      throw parse_error(parse_code::document_shape, "$", std::string("missing field ") + field);
  if (!j["size"].is_number_integer())
    throw parse_error(parse_code::document_shape, "size", "expected an integer");
  if (!j["unit"].is_number_integer())
    throw parse_error(parse_code::document_shape, "unit", "expected an integer");
  if (!j["table"].is_array())
    throw parse_error(parse_code::document_shape, "table", "expected an array of rows");

  AlgebraDocument doc;
  MagmaTable& m = doc.algebra;
  long long size = j["size"].get<long long>();
  if (size < 1 || size > kMaxCarrier)
    throw parse_error(parse_code::size_value, "size",
                      "size must be in [1," + std::to_string(kMaxCarrier) + "], got " +
                          std::to_string(size));
  m.size = static_cast<int>(size);
  long long unit = j["unit"].get<long long>();
  if (unit < 0 || unit >= size)
    throw parse_error(parse_code::unit_range, "unit",
                      "unit " + std::to_string(unit) + " outside [0," + std::to_string(size) + ")");
  m.unit = static_cast<int>(unit);

  if (static_cast<long long>(j["table"].size()) != size)
    throw parse_error(parse_code::document_shape, "table",
                      "expected " + std::to_string(size) + " rows, got " +
                          std::to_string(j["table"].size()));
  m.table.reserve(static_cast<std::size_t>(size) * size);
  for (long long r = 0; r < size; ++r) {
    const json& row = j["table"][r];
    std::string where = "table[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<long long>(row.size()) != size)
      throw parse_error(parse_code::document_shape, where,
                        "expected a row of " + std::to_string(size) + " entries");
    for (long long c = 0; c < size; ++c) {
      const json& cell = row[c];
      std::string at = where + "[" + std::to_string(c) + "]";
      if (!cell.is_number_integer())
        throw parse_error(parse_code::document_shape, at, "expected an integer");
      long long v = cell.get<long long>();
      if (v < 0 || v >= size)
        throw parse_error(parse_code::entry_range, at,
                          "entry " + std::to_string(v) + " outside [0," + std::to_string(size) +
                              ")");
      m.table.push_back(static_cast<std::uint8_t>(v));
    }
  }
  if (j.contains("names")) {
    if (!j["names"].is_array() || static_cast<long long>(j["names"].size()) != size)
      throw parse_error(parse_code::document_shape, "names",
                        "expected " + std::to_string(size) + " names");
    for (const auto& n : j["names"]) {
      if (!n.is_string())
        throw parse_error(parse_code::document_shape, "names", "expected strings");
      m.names.push_back(n.get<std::string>());
    }
  }
  if (j.contains("source")) {
    if (!j["source"].is_string())
      throw parse_error(parse_code::document_shape, "source", "expected a string");
    doc.source = j["source"].get<std::string>();
  }
  return doc;
}

AlgebraDocument load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lalg_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_algebra(buf.str());
  } catch (parse_error& e) {
    throw parse_error(e.code, path + ":" + e.location, e.what());
  }
}

ordered_json emit_algebra(const AlgebraDocument& doc) {
  ordered_json j;
  j["size"] = doc.algebra.size;
  j["unit"] = doc.algebra.unit;
  ordered_json rows = ordered_json::array();
  for (int a = 0; a < doc.algebra.size; ++a) {
    ordered_json row = ordered_json::array();
    for (int b = 0; b < doc.algebra.size; ++b) row.push_back(doc.algebra.op(a, b));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  if (!doc.algebra.names.empty()) j["names"] = doc.algebra.names;
  if (!doc.source.empty()) j["source"] = doc.source;
  return j;
}

json subset_to_json(const MagmaTable&, Mask s) {
  json arr = json::array();
  for_each_bit(s, [&](int e) { arr.push_back(e); });
  return arr;
}

Mask subset_from_json(const MagmaTable& m, const json& j) {
  if (!j.is_array()) throw lalg_error("subset must be an index array");
  Mask s = 0;
  for (const auto& e : j) {
    int v = e.get<int>();
    if (v < 0 || v >= m.size) throw lalg_error("subset index out of range");
    s |= bit(v);
  }
  return s;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string emit_dot(const FiniteLattice& l, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n  rankdir=BT;\n";
  for (int a = 0; a < l.size; ++a) {
    std::string label = a < static_cast<int>(l.labels.size()) ? l.labels[a] : std::to_string(a);
    out << "  n" << a << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  for (auto [a, b] : l.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_dot(const SpectrumSpace& s, const MagmaTable& m) {
  std::ostringstream out;
  out << "digraph spectrum {\n  rankdir=BT;\n";
  const int np = static_cast<int>(s.points.size());
  for (int p = 0; p < np; ++p) {
    std::string label = "{";
    bool first = true;
    for_each_bit(s.points[p], [&](int e) {
      if (!first) label += ",";
      label += m.name(e);
      first = false;
    });
    label += "}";
    out << "  p" << p << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  // cover edges of containment between prime ideals
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b) {
      if (a == b) continue;
      if ((s.points[a] & ~s.points[b]) != 0) continue;  // a not inside b
      bool covered = true;
      for (int c = 0; c < np && covered; ++c) {
        if (c == a || c == b) continue;
        if ((s.points[a] & ~s.points[c]) == 0 && (s.points[c] & ~s.points[b]) == 0)
          covered = false;
      }
      if (covered) out << "  p" << a << " -> p" << b << ";\n";
    }
  out << "}\n";
  return out.str();
}

bool VerdictReport::all_ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

ordered_json VerdictReport::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["algebra"] = algebra;
  ordered_json list = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json e;
    e["name"] = c.name;
    e["ok"] = c.ok;
    if (!c.witness.is_null()) e["witness"] = c.witness;
    list.push_back(std::move(e));
  }
  j["checks"] = std::move(list);
  j["ok"] = all_ok();
  j["timing_ms"] = timing_ms;
  return j;
}

}  // namespace lalg
