#include "rainbow/constructors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

std::vector<Vertex> leaves_of(int n, Vertex center) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (v != center) out.push_back(v);
  return out;
}

std::pair<Vertex, Vertex> endpoints(const ColoredEdge& e) { return std::minmax(e.u, e.v); }

}  // namespace

RainbowCollection construct_different_centers(const StarConfiguration& cfg) {
  if (!cfg.centers_all_distinct()) throw CentersNotDistinct("monochromatic stars do not have pairwise distinct centers");
  const int n = cfg.n();
  const int colors = n - 1;

  // n vertices, n-1 centers: exactly one vertex hosts no star.
  std::vector<bool> is_center(static_cast<std::size_t>(n), false);
  for (Vertex c : cfg.centers()) is_center[c] = true;
  const auto free_vertex = static_cast<Vertex>(std::ranges::find(is_center, false) - is_center.begin());

  RainbowCollection out;
  for (Color own = 0; own < colors; ++own) {
    RainbowSubgraph part{{}, Shape::star};
    const Vertex hub = cfg.center(own);
    for (Color c = 0; c < colors; ++c)
      part.edges.push_back(c == own ? cfg.edge_to(own, free_vertex) : cfg.edge_to(c, hub));
    out.parts.push_back(std::move(part));
  }
  return out;
}

RainbowCollection construct_same_center(const StarConfiguration& cfg) {
  if (!cfg.centers_all_equal()) throw CentersNotAllEqual("monochromatic stars do not share one center");
  const int n = cfg.n();
  const int m = n - 1;
  const auto leaves = leaves_of(n, cfg.center(0));

  RainbowCollection out;
  for (int j = 0; j < m; ++j) {
    RainbowSubgraph part{{}, Shape::star};
    for (Color k = 0; k < m; ++k) part.edges.push_back(cfg.edge_to(k, leaves[static_cast<std::size_t>((j + k) % m)]));
    out.parts.push_back(std::move(part));
  }
  return out;
}

TreeTemplate identical_tree_template(const ColoredMultigraph& g) {
  const int n = g.vertex_count();
  if (n < 2 || g.color_count() != n - 1)
    throw ClassesNotIdentical("expected " + std::to_string(n - 1) + " colors, found " + std::to_string(g.color_count()));

  TreeTemplate t;
  const auto base = g.color_class(0);
  if (!is_spanning_tree(g, base)) throw ClassesNotIdentical("color 0 is not a spanning tree");
  std::map<std::pair<Vertex, Vertex>, int> slot_by_pair;
  for (EdgeId id : base) {
    slot_by_pair.emplace(endpoints(g.edge(id)), static_cast<int>(t.slots.size()));
    t.slots.push_back(endpoints(g.edge(id)));
  }

  t.slot_of_edge.assign(static_cast<std::size_t>(g.edge_count()), -1);
  t.edge_at.assign(static_cast<std::size_t>(g.color_count()), std::vector<EdgeId>(t.slots.size(), kNoEdge));
  for (Color c = 0; c < g.color_count(); ++c) {
    const auto cls = g.color_class(c);
    if (cls.size() != t.slots.size())
      throw ClassesNotIdentical("color " + std::to_string(c) + " has " + std::to_string(cls.size()) + " edges");
    for (EdgeId id : cls) {
      const auto it = slot_by_pair.find(endpoints(g.edge(id)));
      if (it == slot_by_pair.end())
        throw ClassesNotIdentical("color " + std::to_string(c) + " edge " + std::to_string(id) + " is not in the template");
      auto& cell = t.edge_at[c][it->second];
      if (cell != kNoEdge)
        throw ClassesNotIdentical("color " + std::to_string(c) + " repeats template edge " + std::to_string(it->second));
      cell = id;
      t.slot_of_edge[id] = it->second;
    }
  }
  return t;
}

RainbowCollection construct_identical_trees(const ColoredMultigraph& g, const LatinSquare& square) {
  const auto t = identical_tree_template(g);
  const int m = g.vertex_count() - 1;
  if (square.side() != m)
    throw InvalidLatinSquare("square has side " + std::to_string(square.side()) + ", expected " + std::to_string(m));

  RainbowCollection out;
  for (int i = 0; i < m; ++i) {
    RainbowSubgraph part{{}, Shape::tree};
    for (int s = 0; s < m; ++s) part.edges.push_back(t.edge_at[square.at(i, s)][s]);
    out.parts.push_back(std::move(part));
  }
  return out;
}

TwoCenterConfig TwoCenterConfig::from(const StarConfiguration& cfg, std::optional<std::span<const Color>> order) {
  const int m = cfg.n() - 1;
  if (cfg.distinct_center_count() != 2)
    throw InvalidTwoCenterConfig("stars sit on " + std::to_string(cfg.distinct_center_count()) +
                                 " distinct centers, expected 2");

  std::vector<Color> sequence;
  if (order) {
    sequence.assign(order->begin(), order->end());
    auto sorted = sequence;
    std::ranges::sort(sorted);
    std::vector<Color> expected(static_cast<std::size_t>(m));
    for (Color c = 0; c < m; ++c) expected[c] = c;
    if (sorted != expected) throw InvalidTwoCenterConfig("color order must list every color exactly once");
  } else {
    for (Color c = 0; c < m; ++c) sequence.push_back(c);
  }

  const Vertex k = cfg.center(sequence.front());
  Vertex j = k;
  std::vector<Color> colors_k;
  std::vector<Color> colors_j;
  for (Color c : sequence) {
    if (cfg.center(c) == k) {
      colors_k.push_back(c);
    } else {
      j = cfg.center(c);
      colors_j.push_back(c);
    }
  }
  return TwoCenterConfig(cfg, k, j, std::move(colors_k), std::move(colors_j));
}

RainbowCollection construct_two_centers(const TwoCenterConfig& tc) {
  const auto& cfg = tc.cfg();
  const int n = cfg.n();
  const int m = n - 1;

  std::vector<Color> cycle(tc.colors_k().begin(), tc.colors_k().end());
  cycle.insert(cycle.end(), tc.colors_j().begin(), tc.colors_j().end());

  std::vector<Vertex> others;
  for (Vertex v = 0; v < n; ++v)
    if (v != tc.center_k() && v != tc.center_j()) others.push_back(v);

  auto center_partner = [&](Color c) { return cfg.center(c) == tc.center_k() ? tc.center_j() : tc.center_k(); };

  RainbowCollection out;
  for (int t = 0; t < m; ++t) {
    RainbowSubgraph part{{}, Shape::tree};
    const Color bridge = cycle[static_cast<std::size_t>(t)];
    part.edges.push_back(cfg.edge_to(bridge, center_partner(bridge)));
    for (std::size_t i = 0; i < others.size(); ++i) {
      const Color c = cycle[(static_cast<std::size_t>(t) + 1 + i) % static_cast<std::size_t>(m)];
      part.edges.push_back(cfg.edge_to(c, others[i]));
    }
    out.parts.push_back(std::move(part));
  }
  return out;
}


ConstructMethod construct_method_from_string(const std::string& s) {
  if (s == "auto") return ConstructMethod::automatic;
  if (s == "different-centers") return ConstructMethod::different_centers;
  if (s == "same-center") return ConstructMethod::same_center;
  if (s == "two-centers") return ConstructMethod::two_centers;
  if (s == "identical-trees") return ConstructMethod::identical_trees;
  throw std::invalid_argument("unknown construction method '" + s + "'");
}

std::string to_string(ConstructMethod m) {
  switch (m) {
    case ConstructMethod::automatic: return "auto";
    case ConstructMethod::different_centers: return "different-centers";
    case ConstructMethod::same_center: return "same-center";
    case ConstructMethod::two_centers: return "two-centers";
    case ConstructMethod::identical_trees: return "identical-trees";
  }
  return "?";
}

ConstructResult construct(const ColoredMultigraph& g, ConstructMethod method, const ConstructOptions& opts) {
  if (method == ConstructMethod::identical_trees) {
    const auto square = opts.square.value_or(LatinSquare::cyclic(std::max(1, g.vertex_count() - 1)));
    return {method, construct_identical_trees(g, square)};
  }
  const auto cfg = as_star_configuration(g);
  auto two_centers = [&] {
    const auto tc = opts.order ? TwoCenterConfig::from(cfg, std::span<const Color>(*opts.order)) : TwoCenterConfig::from(cfg);
    return construct_two_centers(tc);
  };
  switch (method) {
    case ConstructMethod::different_centers: return {method, construct_different_centers(cfg)};
    case ConstructMethod::same_center: return {method, construct_same_center(cfg)};
    case ConstructMethod::two_centers: return {method, two_centers()};
    case ConstructMethod::automatic:
    case ConstructMethod::identical_trees: break;
  }
  // auto only picks star-preserving constructions; two centers must be asked for.
  if (cfg.centers_all_equal()) return {ConstructMethod::same_center, construct_same_center(cfg)};
  if (cfg.centers_all_distinct()) return {ConstructMethod::different_centers, construct_different_centers(cfg)};
  std::string hint;
  if (cfg.distinct_center_count() == 2) hint = "; --method two-centers still yields rainbow trees";
  throw HypothesisViolation("stars sit on " + std::to_string(cfg.distinct_center_count()) +
                            " centers with some shared: a decomposition into rainbow stars exists only when all "
                            "centers are equal or pairwise distinct" + hint);
}

}  // namespace rainbow
