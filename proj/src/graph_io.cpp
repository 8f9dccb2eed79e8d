#include "rainbow/graph_io.hpp"

#include <algorithm>
#include <limits>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

using nlohmann::json;

int line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

[[noreturn]] void field_error(const std::string& field, const std::string& what) { throw ParseError(field + ": " + what); }

int read_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) field_error(field, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) field_error(field, "integer out of range");
  return static_cast<int>(v);
}

constexpr std::array<std::string_view, 10> kPalette = {"red",    "blue",  "green3", "gold",  "purple",
                                                       "orange", "cyan3", "brown",  "black", "deeppink"};

constexpr std::array<std::string_view, 16> kKnownDotColors = {
    "red",  "blue",  "green", "yellow", "purple", "orange", "black", "cyan",
    "brown", "pink", "gold",  "gray",   "magenta", "violet", "navy",  "green3"};

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

std::string GraphDocument::color_name(Color c) const {
  if (c >= 0 && static_cast<std::size_t>(c) < color_names.size()) return color_names[c];
  return std::to_string(c);
}

GraphDocument parse_graph_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "n" && key != "edges" && key != "color_names") field_error(key, "unknown field");
  if (!doc.contains("n")) field_error("n", "missing");
  if (!doc.contains("edges")) field_error("edges", "missing");

  const int n = read_int(doc["n"], "n");
  if (n < 1) field_error("n", "must be at least 1");

  std::vector<std::string> names;
  if (doc.contains("color_names")) {
    const auto& jn = doc["color_names"];
    if (!jn.is_array()) field_error("color_names", "expected a list of strings");
    for (std::size_t i = 0; i < jn.size(); ++i) {
      if (!jn[i].is_string()) field_error("color_names[" + std::to_string(i) + "]", "expected a string");
      names.push_back(jn[i].get<std::string>());
    }
  }

  const auto& je = doc["edges"];
  if (!je.is_array()) field_error("edges", "expected a list of [u, v, color] triples");
  std::vector<EdgeSpec> specs;
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string field = "edges[" + std::to_string(i) + "]";
    if (!je[i].is_array() || je[i].size() != 3) field_error(field, "expected [u, v, color]");
    const int u = read_int(je[i][0], field + "[0]");
    const int v = read_int(je[i][1], field + "[1]");
    const int c = read_int(je[i][2], field + "[2]");
    if (u < 0 || u >= n) field_error(field + "[0]", "vertex " + std::to_string(u) + " out of range [0, " + std::to_string(n) + ")");
    if (v < 0 || v >= n) field_error(field + "[1]", "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
    if (u == v) field_error(field, "loop at vertex " + std::to_string(u));
    if (c < 0) field_error(field + "[2]", "negative color");
    if (!names.empty() && static_cast<std::size_t>(c) >= names.size())
      field_error(field + "[2]", "color " + std::to_string(c) + " has no entry in color_names");
    specs.push_back({u, v, c});
  }

  const int color_count = names.empty() ? -1 : static_cast<int>(names.size());
  try {
    return GraphDocument{ColoredMultigraph(n, specs, color_count), std::move(names)};
  } catch (const InvalidGraph& e) {
    throw ParseError(std::string("edges: ") + e.what());
  }
}

GraphDocument load_graph_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph_document(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string emit_graph_document(const GraphDocument& doc) {
  std::ostringstream out;
  out << "{\n  \"n\": " << doc.graph.vertex_count() << ",\n";
  if (!doc.color_names.empty()) {
    out << "  \"color_names\": [";
    for (std::size_t i = 0; i < doc.color_names.size(); ++i) out << (i ? ", " : "") << quoted(doc.color_names[i]);
    out << "],\n";
  }
  const auto edges = doc.graph.edges();
  if (edges.empty()) {
    out << "  \"edges\": []\n}\n";
    return out.str();
  }
  out << "  \"edges\": [\n";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    out << "    [" << e.u << ", " << e.v << ", " << e.color << "]" << (i + 1 < edges.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string dot_color(const GraphDocument& doc, Color c) {
  if (static_cast<std::size_t>(c) < doc.color_names.size()) {
    const auto& name = doc.color_names[c];
    if (std::ranges::find(kKnownDotColors, std::string_view(name)) != kKnownDotColors.end()) return name;
  }
  return std::string(kPalette[static_cast<std::size_t>(c) % kPalette.size()]);
}

std::string graph_to_dot(const GraphDocument& doc) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < doc.graph.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& e : doc.graph.edges())
    out << "  " << e.u << " -- " << e.v << " [color=" << quoted(dot_color(doc, e.color)) << ", label=\"e" << e.id
        << "\", penwidth=2];\n";
  out << "}\n";
  return out.str();
}

std::string collection_to_dot(const GraphDocument& doc, const RainbowCollection& coll) {
  std::ostringstream out;
  out << "graph decomposition {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < coll.parts.size(); ++i) {
    const auto& part = coll.parts[i];
    const std::string prefix = "p" + std::to_string(i) + "_";
    out << "  subgraph cluster_" << i << " {\n    label=\"part " << i << " (" << to_string(part.shape) << ")\";\n";
    for (Vertex v = 0; v < doc.graph.vertex_count(); ++v)
      out << "    " << prefix << v << " [label=\"" << v << "\"];\n";
    for (EdgeId id : part.edges) {
      const auto& e = doc.graph.edge(id);
      out << "    " << prefix << e.u << " -- " << prefix << e.v << " [color=" << quoted(dot_color(doc, e.color))
          << ", label=\"e" << id << "\", penwidth=2];\n";
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json report_to_json(const ValidationReport& r, const GraphDocument& doc) {
  json classes = json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"color", c.color},
                       {"name", doc.color_name(c.color)},
                       {"size", c.size},
                       {"shape", to_string(c.shape)},
                       {"spanning_tree", c.spanning_tree},
                       {"path", c.path},
                       {"centers", c.centers}});
  }
  json out = {{"vertex_count", r.vertex_count},
              {"edge_count", r.edge_count},
              {"color_count", r.color_count},
              {"connected", r.connected},
              {"loop_free", r.loop_free},
              {"color_count_matches", r.color_count_matches},
              {"all_stars", r.all_stars()},
              {"all_paths", r.all_paths()},
              {"all_spanning_trees", r.all_spanning_trees()},
              {"classes", classes}};
  if (r.all_stars()) {
    // First admissible center per class, matching as_star_configuration.
    std::vector<Vertex> centers;
    for (const auto& c : r.classes) centers.push_back(c.centers.front());
    const std::set<Vertex> distinct(centers.begin(), centers.end());
    out["star_centers"] = centers;
    out["distinct_centers"] = distinct.size();
  }
  return out;
}

nlohmann::json collection_to_json(const GraphDocument& doc, const RainbowCollection& coll) {
  json parts = json::array();
  for (const auto& p : coll.parts) {
    json colors = json::array();
    for (EdgeId id : p.edges) colors.push_back(doc.color_name(doc.graph.edge(id).color));
    json part = {{"shape", to_string(p.shape)}, {"edges", p.edges}, {"colors", colors}};
    if (p.shape == Shape::star) {
      const auto centers = star_centers(doc.graph, p.edges);
      if (!centers.empty()) part["center"] = centers.front();
    }
    parts.push_back(std::move(part));
  }
  return {{"parts", parts}};
}

nlohmann::json search_report_to_json(const GraphDocument& doc, const SearchReport& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(collection_to_json(doc, c));
  return {{"shape", to_string(r.shape)},
          {"mode", to_string(r.mode)},
          {"exists", r.count > 0},
          {"count", r.count},
          {"exhausted", r.exhausted},
          {"nodes", r.nodes},
          {"certificates", certs}};
}

}  // namespace rainbow
