#include "isg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "isg/builtins.hpp"
#include "isg/error.hpp"

namespace isg {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(std::string_view source, const std::string& what) {
  throw Error(ErrorKind::kParseError, std::string(source) + ": " + what);
}

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Recover the line from the byte offset.
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) line += text[i] == '\n';
    parse_error(source, "line " + std::to_string(line) + ": " + e.what());
  }
}

const json& field(const json& doc, const char* name, std::string_view source) {
  if (!doc.is_object() || !doc.contains(name)) parse_error(source, std::string("missing field '") + name + "'");
  return doc.at(name);
}

Index index_value(const json& v, std::size_t bound, std::string_view source, const std::string& where) {
  if (!v.is_number_integer()) parse_error(source, where + ": expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < 0 || static_cast<std::size_t>(x) >= bound)
    parse_error(source, where + ": index " + std::to_string(x) + " out of range");
  return static_cast<Index>(x);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kParseError, "cannot write " + path);
  out << contents;
}

InverseSemigroup parse_semigroup(std::string_view text, std::string_view source) {
  const json doc = parse_json(text, source);
  const json& rows = field(doc, "table", source);
  if (!rows.is_array() || rows.empty()) parse_error(source, "field 'table' must be a nonempty array of rows");
  const std::size_t n = rows.size();
  std::vector<Index> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "field 'table' row " + std::to_string(i);
    if (!rows[i].is_array()) parse_error(source, where + ": not an array");
    if (rows[i].size() != n)
      parse_error(source, where + ": has " + std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) flat.push_back(index_value(rows[i][j], n, source, where + " column " + std::to_string(j)));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& l = doc.at("labels");
    if (!l.is_array() || l.size() != n) parse_error(source, "field 'labels' must have one string per element");
    for (std::size_t i = 0; i < n; ++i) {
      if (!l[i].is_string()) parse_error(source, "field 'labels' entry " + std::to_string(i) + ": not a string");
      labels.push_back(l[i].get<std::string>());
    }
  }
  return validate_inverse_semigroup(n, std::move(flat), std::move(labels));
}

InverseSemigroup load_semigroup(const std::string& path) { return parse_semigroup(read_file(path), path); }

std::string semigroup_to_json(const InverseSemigroup& s) {
  json doc;
  doc["labels"] = s.labels();
  doc["table"] = s.table_rows();
  return doc.dump(1) + "\n";
}

void save_semigroup(const InverseSemigroup& s, const std::string& path) { write_file(path, semigroup_to_json(s)); }

InverseSemigroup load_subject(const std::string& path) {
  const std::string text = read_file(path);
  const json doc = parse_json(text, path);
  if (doc.is_object() && doc.contains("vertices")) return graph_inverse_semigroup(parse_graph(text)).semigroup;
  return parse_semigroup(text, path);
}

InverseSemigroup resolve_subject(const std::string& subject) {
  constexpr std::string_view prefix = "builtin:";
  if (subject.rfind(prefix, 0) == 0) return builtin(std::string_view(subject).substr(prefix.size()));
  return load_subject(subject);
}

Relation parse_relation(std::string_view text, std::size_t n) {
  const json doc = parse_json(text, "<relation>");
  if (!doc.is_array()) parse_error("<relation>", "expected an array of blocks");
  std::vector<std::vector<Index>> blocks;
  for (std::size_t b = 0; b < doc.size(); ++b) {
    if (!doc[b].is_array()) parse_error("<relation>", "block " + std::to_string(b) + " is not an array");
    std::vector<Index> block;
    for (const auto& v : doc[b]) block.push_back(index_value(v, n, "<relation>", "block " + std::to_string(b)));
    blocks.push_back(std::move(block));
  }
  return Relation::from_blocks(n, std::move(blocks));
}

std::string relation_to_json(const Relation& r) { return json(r.blocks()).dump() + "\n"; }

Action parse_action(std::string_view text, std::shared_ptr<const InverseSemigroup> s) {
  constexpr std::string_view src = "<action>";
  const json doc = parse_json(text, src);
  const json& space = field(doc, "space", src);
  if (!space.is_number_integer() || space.get<std::int64_t>() < 0) parse_error(src, "field 'space' must be a nonnegative integer");
  const auto m = space.get<std::size_t>();
  const json& maps = field(doc, "maps", src);
  if (!maps.is_object()) parse_error(src, "field 'maps' must be an object");
  std::vector<PartialMap> out(s->size(), PartialMap(m));
  std::vector<bool> given(s->size(), false);
  for (const auto& [key, images] : maps.items()) {
    std::size_t idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      parse_error(src, "maps key '" + key + "' is not an element index");
    }
    if (idx >= s->size()) parse_error(src, "maps key '" + key + "' out of range");
    if (!images.is_array() || images.size() != m) parse_error(src, "maps['" + key + "'] must have one entry per point");
    for (std::size_t x = 0; x < m; ++x)
      if (!images[x].is_null()) out[idx].set(x, static_cast<std::int32_t>(index_value(images[x], m, src, "maps['" + key + "']")));
    given[idx] = true;
  }
  for (std::size_t i = 0; i < given.size(); ++i)
    if (!given[i]) parse_error(src, "maps is missing element " + std::to_string(i));
  return validate_action(std::move(s), m, std::move(out));
}

std::string action_to_json(const Action& a) {
  json doc;
  doc["space"] = a.space_size;
  json maps = json::object();
  for (std::size_t i = 0; i < a.maps.size(); ++i) {
    json row = json::array();
    for (std::size_t x = 0; x < a.space_size; ++x)
      row.push_back(a.maps[i].defined(x) ? json(a.maps[i](x)) : json(nullptr));
    maps[std::to_string(i)] = row;
  }
  doc["maps"] = maps;
  return doc.dump(1) + "\n";
}

DirectedGraph parse_graph(std::string_view text) {
  constexpr std::string_view src = "<graph>";
  const json doc = parse_json(text, src);
  const json& v = field(doc, "vertices", src);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) parse_error(src, "field 'vertices' must be a positive integer");
  DirectedGraph g{v.get<std::size_t>(), {}};
  const json& edges = field(doc, "edges", src);
  if (!edges.is_array()) parse_error(src, "field 'edges' must be an array");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string where = "edge " + std::to_string(e);
    if (!edges[e].is_array() || edges[e].size() != 2) parse_error(src, where + ": expected [src, dst]");
    g.edges.emplace_back(index_value(edges[e][0], g.vertices, src, where), index_value(edges[e][1], g.vertices, src, where));
  }
  return g;
}

std::string graph_to_json(const DirectedGraph& g) {
  json doc;
  doc["vertices"] = g.vertices;
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  doc["edges"] = edges;
  return doc.dump() + "\n";
}

std::string groupoid_to_json(const FiniteGroupoid& g) {
  json doc;
  doc["arrows"] = g.labels();
  doc["units"] = g.unit_list();
  std::vector<Index> r, d, inv;
  for (Index a = 0; a < g.size(); ++a) {
    r.push_back(g.r(a));
    d.push_back(g.d(a));
    inv.push_back(g.inv(a));
  }
  doc["range"] = r;
  doc["source"] = d;
  doc["inverse"] = inv;
  json comp = json::array();
  for (const auto& [a, b, ab] : g.composable_pairs()) comp.push_back({a, b, ab});
  doc["composition"] = comp;
  json basis = json::array();
  for (const auto& b : g.basis()) basis.push_back({{"label", b.label}, {"arrows", b.arrows.to_vector()}});
  doc["basis"] = basis;
  doc["basis_assumed_discrete"] = g.basis_is_assumed_discrete();
  return doc.dump(1) + "\n";
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

std::string groupoid_to_dot(const FiniteGroupoid& g, const ElementSet& highlight) {
  std::ostringstream out;
  out << "digraph groupoid {\n  rankdir=LR;\n";
  for (Index u : g.unit_list())
    out << "  u" << u << " [shape=box, label=\"" << dot_escape(g.label(u)) << "\"];\n";
  for (Index a = 0; a < g.size(); ++a) {
    if (g.is_unit(a)) continue;
    out << "  u" << g.d(a) << " -> u" << g.r(a) << " [label=\"" << dot_escape(g.label(a)) << "\"";
    if (highlight.contains(a)) out << ", color=red, penwidth=2";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string function_to_json(const GroupoidFunction& f) {
  json doc = json::array();
  for (const auto& z : f.values) doc.push_back({z.real(), z.imag()});
  return doc.dump() + "\n";
}

GroupoidFunction parse_function(std::string_view text, std::shared_ptr<const FiniteGroupoid> g) {
  constexpr std::string_view src = "<function>";
  const json doc = parse_json(text, src);
  if (!doc.is_array() || doc.size() != g->size()) parse_error(src, "expected one [re, im] pair per arrow");
  auto f = GroupoidFunction::zero(std::move(g));
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& p = doc[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      parse_error(src, "entry " + std::to_string(i) + ": expected [re, im]");
    f.values[i] = Complex(p[0].get<double>(), p[1].get<double>());
  }
  return f;
}

}  // namespace isg
