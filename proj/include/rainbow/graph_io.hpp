#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "rainbow/multigraph.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

/// A graph plus its optional color name table. Names live only here; the
/// core works with dense color ids.
struct GraphDocument {
  ColoredMultigraph graph;
  std::vector<std::string> color_names;

  std::string color_name(Color c) const;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

/// Parses the graph file format (see docs/graph-format.md). Throws
/// ParseError naming the line (syntax) or field (content) at fault.
GraphDocument parse_graph_document(std::string_view text);
GraphDocument load_graph_document(const std::string& path);

/// Canonical text form; parse followed by emit reproduces it byte for byte.
std::string emit_graph_document(const GraphDocument& doc);

/// Maps a color name to a DOT color; unknown names get a palette entry.
std::string dot_color(const GraphDocument& doc, Color c);

std::string graph_to_dot(const GraphDocument& doc);
/// One cluster per part, each drawing that part's edges.
std::string collection_to_dot(const GraphDocument& doc, const RainbowCollection& coll);

nlohmann::json report_to_json(const ValidationReport& r, const GraphDocument& doc);
nlohmann::json collection_to_json(const GraphDocument& doc, const RainbowCollection& coll);
nlohmann::json search_report_to_json(const GraphDocument& doc, const SearchReport& r);

}  // namespace rainbow
