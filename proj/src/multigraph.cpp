#include "rainbow/multigraph.hpp"

#include <algorithm>
#include <numeric>

#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

ColoredMultigraph::ColoredMultigraph(int vertex_count, std::span<const EdgeSpec> edges, int color_count)
    : vertex_count_(vertex_count), color_count_(color_count) {
  if (vertex_count < 1) throw InvalidGraph("vertex count must be positive, got " + std::to_string(vertex_count));
  int max_color = -1;
  for (const auto& e : edges) max_color = std::max(max_color, e.color);
  if (color_count_ < 0) color_count_ = max_color + 1;

  edges_.reserve(edges.size());
  classes_.resize(static_cast<std::size_t>(color_count_));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const std::string where = "edge " + std::to_string(i);
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
      throw InvalidGraph(where + ": endpoint out of range [0, " + std::to_string(vertex_count) + ")");
    if (e.u == e.v) throw InvalidGraph(where + ": loop at vertex " + std::to_string(e.u));
    if (e.color < 0 || e.color >= color_count_)
      throw InvalidGraph(where + ": color " + std::to_string(e.color) + " out of range [0, " +
                         std::to_string(color_count_) + ")");
    const auto id = static_cast<EdgeId>(i);
    edges_.push_back({id, e.u, e.v, e.color});
    classes_[static_cast<std::size_t>(e.color)].push_back(id);
  }
}

std::vector<EdgeSpec> ColoredMultigraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({e.u, e.v, e.color});
  return out;
}

int ColoredMultigraph::degree(Vertex v) const {
  return static_cast<int>(std::ranges::count_if(edges_, [v](const ColoredEdge& e) { return e.touches(v); }));
}

bool ColoredMultigraph::connected() const {
  DisjointSets ds(vertex_count_);
  int components = vertex_count_;
  for (const auto& e : edges_)
    if (ds.unite(e.u, e.v)) --components;
  return components == 1;
}

std::string to_string(Shape s) {
  switch (s) {
    case Shape::star: return "star";
    case Shape::tree: return "tree";
    case Shape::path: return "path";
  }
  return "?";
}

Shape shape_from_string(const std::string& s) {
  if (s == "star") return Shape::star;
  if (s == "tree") return Shape::tree;
  if (s == "path") return Shape::path;
  throw std::invalid_argument("unknown shape '" + s + "'");
}

std::string to_string(ClassShape s) {
  switch (s) {
    case ClassShape::star: return "star";
    case ClassShape::path: return "path";
    case ClassShape::tree: return "tree";
    case ClassShape::other: return "other";
  }
  return "?";
}

bool is_spanning_tree(const ColoredMultigraph& g, std::span<const EdgeId> edges) {
  const int n = g.vertex_count();
  if (static_cast<int>(edges.size()) != n - 1) return false;
  DisjointSets ds(n);
  for (EdgeId id : edges) {
    if (id < 0 || id >= g.edge_count()) return false;
    const auto& e = g.edge(id);
    if (!ds.unite(e.u, e.v)) return false;
  }
  return true;
}

bool is_spanning_path(const ColoredMultigraph& g, std::span<const EdgeId> edges) {
  if (!is_spanning_tree(g, edges)) return false;
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId id : edges) {
    const auto& e = g.edge(id);
    if (++deg[e.u] > 2 || ++deg[e.v] > 2) return false;
  }
  return true;
}

std::vector<Vertex> star_centers(const ColoredMultigraph& g, std::span<const EdgeId> edges) {
  if (!is_spanning_tree(g, edges)) return {};
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (std::ranges::all_of(edges, [&](EdgeId id) { return g.edge(id).touches(v); })) out.push_back(v);
  return out;
}

bool is_spanning_star(const ColoredMultigraph& g, std::span<const EdgeId> edges) {
  return !star_centers(g, edges).empty();
}

bool is_rainbow(const ColoredMultigraph& g, std::span<const EdgeId> edges) {
  std::vector<bool> seen(static_cast<std::size_t>(g.color_count()), false);
  for (EdgeId id : edges) {
    if (id < 0 || id >= g.edge_count()) return false;
    const auto c = static_cast<std::size_t>(g.edge(id).color);
    if (seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

bool matches_shape(const ColoredMultigraph& g, std::span<const EdgeId> edges, Shape shape) {
  switch (shape) {
    case Shape::star: return is_spanning_star(g, edges);
    case Shape::tree: return is_spanning_tree(g, edges);
    case Shape::path: return is_spanning_path(g, edges);
  }
  return false;
}

bool ValidationReport::all_stars() const {
  return std::ranges::all_of(classes, [](const ClassReport& c) { return !c.centers.empty(); });
}

bool ValidationReport::all_paths() const {
  return std::ranges::all_of(classes, [](const ClassReport& c) { return c.path; });
}

bool ValidationReport::all_spanning_trees() const {
  return std::ranges::all_of(classes, [](const ClassReport& c) { return c.spanning_tree; });
}

ValidationReport validate_graph(const ColoredMultigraph& g) {
  ValidationReport r;
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();
  r.color_count = g.color_count();
  r.connected = g.connected();
  r.loop_free = std::ranges::none_of(g.edges(), [](const ColoredEdge& e) { return e.u == e.v; });
  r.color_count_matches = g.color_count() == g.vertex_count() - 1;
  for (Color c = 0; c < g.color_count(); ++c) {
    const auto cls = g.color_class(c);
    ClassReport cr;
    cr.color = c;
    cr.size = static_cast<int>(cls.size());
    cr.spanning_tree = is_spanning_tree(g, cls);
    cr.path = cr.spanning_tree && is_spanning_path(g, cls);
    cr.centers = star_centers(g, cls);
    if (!cr.centers.empty())
      cr.shape = ClassShape::star;
    else if (cr.path)
      cr.shape = ClassShape::path;
    else if (cr.spanning_tree)
      cr.shape = ClassShape::tree;
    r.classes.push_back(std::move(cr));
  }
  return r;
}

bool StarConfiguration::centers_all_distinct() const {
  return distinct_center_count() == static_cast<int>(centers_.size());
}

bool StarConfiguration::centers_all_equal() const { return distinct_center_count() <= 1; }

int StarConfiguration::distinct_center_count() const {
  auto sorted = centers_;
  std::ranges::sort(sorted);
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

StarConfiguration as_star_configuration(const ColoredMultigraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw NotAStarConfiguration(0, "a spanning star needs at least 2 vertices");
  if (g.color_count() != n - 1)
    throw NotAStarConfiguration(g.color_count() < n - 1 ? g.color_count() : n - 1,
                                "expected " + std::to_string(n - 1) + " colors, found " +
                                    std::to_string(g.color_count()));
  std::vector<Vertex> centers;
  std::vector<EdgeId> spokes(static_cast<std::size_t>(g.color_count()) * static_cast<std::size_t>(n), kNoEdge);
  for (Color c = 0; c < g.color_count(); ++c) {
    const auto cls = g.color_class(c);
    if (static_cast<int>(cls.size()) != n - 1)
      throw NotAStarConfiguration(c, "class has " + std::to_string(cls.size()) + " edges");
    const auto admissible = star_centers(g, cls);
    if (admissible.empty()) throw NotAStarConfiguration(c, "edges share no common vertex or do not span");
    const Vertex center = admissible.front();
    centers.push_back(center);
    for (EdgeId id : cls) spokes[static_cast<std::size_t>(c) * n + g.edge(id).other(center)] = id;
  }
  return StarConfiguration(g, std::move(centers), std::move(spokes));
}

ColoredMultigraph make_star_graph(int n, std::span<const Vertex> centers) {
  std::vector<EdgeSpec> specs;
  for (std::size_t c = 0; c < centers.size(); ++c)
    for (Vertex leaf = 0; leaf < n; ++leaf)
      if (leaf != centers[c]) specs.push_back({centers[c], leaf, static_cast<Color>(c)});
  return ColoredMultigraph(n, specs, static_cast<int>(centers.size()));
}

std::vector<DegreeEntry> vertex_degree_profile(const StarConfiguration& cfg) {
  const int n = cfg.n();
  std::vector<DegreeEntry> out(static_cast<std::size_t>(n));
  for (Vertex c : cfg.centers()) ++out[c].stars_centered;
  for (auto& d : out) d.degree = (d.stars_centered + 1) * (n - 2) + 1;
  return out;
}

RainbowCollection canonicalize(RainbowCollection coll) {
  for (auto& p : coll.parts) std::ranges::sort(p.edges);
  std::ranges::sort(coll.parts, [](const RainbowSubgraph& a, const RainbowSubgraph& b) {
    if (a.edges != b.edges) return a.edges < b.edges;
    return a.shape < b.shape;
  });
  return coll;
}

bool same_decomposition(const RainbowCollection& a, const RainbowCollection& b) {
  return canonicalize(a) == canonicalize(b);
}

bool canonical_less(const RainbowCollection& a, const RainbowCollection& b) {
  const auto ca = canonicalize(a);
  const auto cb = canonicalize(b);
  return std::ranges::lexicographical_compare(ca.parts, cb.parts, [](const auto& x, const auto& y) {
    return x.edges < y.edges;
  });
}

DecompositionCheck check_decomposition(const ColoredMultigraph& g, const RainbowCollection& coll) {
  auto fail = [](std::string why) { return DecompositionCheck{false, std::move(why)}; };
  const int n = g.vertex_count();
  if (static_cast<int>(coll.parts.size()) != n - 1)
    return fail("expected " + std::to_string(n - 1) + " parts, got " + std::to_string(coll.parts.size()));
  std::vector<int> used(static_cast<std::size_t>(g.edge_count()), 0);
  for (std::size_t i = 0; i < coll.parts.size(); ++i) {
    const auto& part = coll.parts[i];
    const std::string label = "part " + std::to_string(i);
    for (EdgeId id : part.edges) {
      if (id < 0 || id >= g.edge_count()) return fail(label + ": unknown edge id " + std::to_string(id));
      ++used[id];
    }
    if (!is_rainbow(g, part.edges)) return fail(label + ": repeated color");
    if (!is_spanning_tree(g, part.edges)) return fail(label + ": not a spanning tree");
    if (!matches_shape(g, part.edges, part.shape)) return fail(label + ": not a spanning " + to_string(part.shape));
  }
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (used[id] == 0) return fail("edge " + std::to_string(id) + " is not covered");
    if (used[id] > 1) return fail("edge " + std::to_string(id) + " is used " + std::to_string(used[id]) + " times");
  }
  return {};
}

}  // namespace rainbow
