#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rainbow {

using Vertex = std::int32_t;
using Color = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr EdgeId kNoEdge = -1;

struct ColoredEdge {
  EdgeId id;
  Vertex u;
  Vertex v;
  Color color;

  Vertex other(Vertex w) const noexcept { return w == u ? v : u; }
  bool touches(Vertex w) const noexcept { return u == w || v == w; }
};

struct EdgeSpec {
  Vertex u;
  Vertex v;
  Color color;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// Loop-free undirected multigraph with an edge coloring. Edge ids are the
/// positions in the edge list, so parallel edges stay distinguishable.
/// Immutable once built.
class ColoredMultigraph {
 public:
  /// Throws InvalidGraph on loops or out-of-range endpoints/colors.
  /// `color_count` < 0 means "one past the largest color used".
  ColoredMultigraph(int vertex_count, std::span<const EdgeSpec> edges, int color_count = -1);

  int vertex_count() const noexcept { return vertex_count_; }
  int color_count() const noexcept { return color_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const ColoredEdge> edges() const noexcept { return edges_; }
  const ColoredEdge& edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }
  std::span<const EdgeId> color_class(Color c) const { return classes_.at(static_cast<std::size_t>(c)); }

  std::vector<EdgeSpec> edge_specs() const;
  int degree(Vertex v) const;
  bool connected() const;

  friend bool operator==(const ColoredMultigraph& a, const ColoredMultigraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.color_count_ == b.color_count_ &&
           a.edge_specs() == b.edge_specs();
  }

 private:
  int vertex_count_;
  int color_count_;
  std::vector<ColoredEdge> edges_;
  std::vector<std::vector<EdgeId>> classes_;
};

enum class Shape { star, tree, path };

std::string to_string(Shape s);
Shape shape_from_string(const std::string& s);

// Predicates on an edge subset of `g`. Spanning means the subset reaches all
// vertices; a spanning tree has exactly n-1 edges and no cycle.
bool is_spanning_tree(const ColoredMultigraph& g, std::span<const EdgeId> edges);
bool is_spanning_path(const ColoredMultigraph& g, std::span<const EdgeId> edges);
/// Vertices incident to every edge of a spanning tree (both endpoints when n = 2).
std::vector<Vertex> star_centers(const ColoredMultigraph& g, std::span<const EdgeId> edges);
bool is_spanning_star(const ColoredMultigraph& g, std::span<const EdgeId> edges);
bool is_rainbow(const ColoredMultigraph& g, std::span<const EdgeId> edges);
bool matches_shape(const ColoredMultigraph& g, std::span<const EdgeId> edges, Shape shape);

enum class ClassShape { star, path, tree, other };
std::string to_string(ClassShape s);

struct ClassReport {
  Color color = 0;
  int size = 0;
  ClassShape shape = ClassShape::other;
  bool spanning_tree = false;
  bool path = false;
  /// Admissible star centers, ascending. Empty unless the class is a star.
  std::vector<Vertex> centers;

  friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

struct ValidationReport {
  int vertex_count = 0;
  int edge_count = 0;
  int color_count = 0;
  bool connected = false;
  bool loop_free = true;
  bool color_count_matches = false;  // color_count == vertex_count - 1
  std::vector<ClassReport> classes;

  bool all_stars() const;
  bool all_paths() const;
  bool all_spanning_trees() const;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

ValidationReport validate_graph(const ColoredMultigraph& g);

/// Coloring in which every color class is a spanning star.
class StarConfiguration {
 public:
  const ColoredMultigraph& graph() const noexcept { return graph_; }
  int n() const noexcept { return graph_.vertex_count(); }
  Vertex center(Color c) const { return centers_.at(static_cast<std::size_t>(c)); }
  std::span<const Vertex> centers() const noexcept { return centers_; }

  /// Edge of color `c` joining center(c) to `leaf`; kNoEdge when leaf == center(c).
  EdgeId edge_to(Color c, Vertex leaf) const {
    return spokes_[static_cast<std::size_t>(c) * static_cast<std::size_t>(n()) + static_cast<std::size_t>(leaf)];
  }

  bool centers_all_distinct() const;
  bool centers_all_equal() const;
  int distinct_center_count() const;

 private:
  friend StarConfiguration as_star_configuration(const ColoredMultigraph& g);
  StarConfiguration(ColoredMultigraph g, std::vector<Vertex> centers, std::vector<EdgeId> spokes)
      : graph_(std::move(g)), centers_(std::move(centers)), spokes_(std::move(spokes)) {}

  ColoredMultigraph graph_;
  std::vector<Vertex> centers_;
  std::vector<EdgeId> spokes_;
};

/// Throws NotAStarConfiguration naming the first offending color, or when the
/// color count is not n-1. For n = 2 the lower endpoint is the center.
StarConfiguration as_star_configuration(const ColoredMultigraph& g);

/// Spanning-star graph on n vertices with color c centered at centers[c].
/// Edges are listed color by color, leaves ascending.
ColoredMultigraph make_star_graph(int n, std::span<const Vertex> centers);

struct DegreeEntry {
  int stars_centered = 0;  // s_k
  int degree = 0;          // (s_k + 1)(n - 2) + 1

  friend bool operator==(const DegreeEntry&, const DegreeEntry&) = default;
};

/// Indexed by vertex.
std::vector<DegreeEntry> vertex_degree_profile(const StarConfiguration& cfg);

struct RainbowSubgraph {
  std::vector<EdgeId> edges;
  Shape shape = Shape::tree;

  friend bool operator==(const RainbowSubgraph&, const RainbowSubgraph&) = default;
};

/// Parts of a decomposition. Constructors emit parts in their natural row
/// order; canonicalize() gives the order-free form.
struct RainbowCollection {
  std::vector<RainbowSubgraph> parts;

  friend bool operator==(const RainbowCollection&, const RainbowCollection&) = default;
};

RainbowCollection canonicalize(RainbowCollection coll);
bool same_decomposition(const RainbowCollection& a, const RainbowCollection& b);
/// Lexicographic comparison of canonical forms.
bool canonical_less(const RainbowCollection& a, const RainbowCollection& b);

struct DecompositionCheck {
  bool ok = true;
  std::string failure;

  explicit operator bool() const noexcept { return ok; }
};

/// Full certificate check: n-1 parts, every part rainbow and of its declared
/// shape, parts pairwise disjoint and covering every edge exactly once.
DecompositionCheck check_decomposition(const ColoredMultigraph& g, const RainbowCollection& coll);

}  // namespace rainbow
