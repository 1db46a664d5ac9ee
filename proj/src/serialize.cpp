#include "ordlat/serialize.hpp"

#include <sstream>

#include "ordlat/error.hpp"

namespace ordlat {

using nlohmann::json;

json to_json(const OrderSpectrum& s) {
  json entries = json::array();
  for (const auto& [order, count] : s.entries) {
    entries.push_back({{"order", to_decimal(order)}, {"count", to_decimal(count)}});
  }
  json out;
  out["group"] = s.group ? json(*s.group) : json(nullptr);
  out["exponent"] = to_decimal(s.exponent);
  out["entries"] = std::move(entries);
  return out;
}

json to_json(const ELatticeDescriptor& d) {
  const auto& lat = d.fix_lattice;
  json nodes = json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    nodes.push_back({{"order", to_decimal(lat.value(i))}, {"count", to_decimal(d.class_size_of(i))}});
  }
  json edges = json::array();
  for (const auto& [lo, hi] : lat.covering_edges()) {
    edges.push_back({to_decimal(lat.value(lo)), to_decimal(lat.value(hi))});
  }
  json out;
  out["exponent"] = to_decimal(lat.base().value());
  out["nodes"] = std::move(nodes);
  out["edges"] = std::move(edges);
  return out;
}

namespace {

Natural decimal_field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw ParseError(0, std::string("missing field '") + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_string()) throw ParseError(0, std::string("field '") + key + "' must be a decimal string");
  try {
    return parse_natural(v.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw ParseError(0, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

SpectrumCandidate candidate_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "invalid JSON");
  }
  if (!doc.is_object()) throw ParseError(0, "spectrum must be a JSON object");
  SpectrumCandidate c;
  if (doc.contains("group") && !doc.at("group").is_null()) {
    if (!doc.at("group").is_string()) throw ParseError(0, "field 'group' must be a string or null");
    c.group = doc.at("group").get<std::string>();
  }
  if (!doc.contains("entries") || !doc.at("entries").is_array()) {
    throw ParseError(0, "field 'entries' must be an array");
  }
  for (const auto& e : doc.at("entries")) {
    if (!e.is_object()) throw ParseError(0, "each entry must be an object");
    c.entries.emplace_back(decimal_field(e, "order"), decimal_field(e, "count"));
  }
  return c;
}

std::string to_dot(const ELatticeDescriptor& d, const std::string& title) {
  const auto& lat = d.fix_lattice;
  std::ostringstream os;
  os << "digraph elattice {\n";
  os << "  label=\"" << title << "\";\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    os << "  n" << i << " [label=\"" << to_decimal(lat.value(i)) << " ("
       << to_decimal(d.class_size_of(i)) << ")\"];\n";
  }
  for (const auto& [lo, hi] : lat.covering_edges()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ordlat
