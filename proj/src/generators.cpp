#include "rainbow/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw_below(rng, i)]);
}

bool fill_latin(std::vector<Color>& cells, int side, int cell, std::mt19937_64& rng) {
  if (cell == side * side) return true;
  const int r = cell / side;
  const int c = cell % side;
  std::vector<Color> symbols(static_cast<std::size_t>(side));
  std::iota(symbols.begin(), symbols.end(), 0);
  shuffle(symbols, rng);
  for (Color x : symbols) {
    bool clash = false;
    for (int k = 0; k < c && !clash; ++k) clash = cells[static_cast<std::size_t>(r * side + k)] == x;
    for (int k = 0; k < r && !clash; ++k) clash = cells[static_cast<std::size_t>(k * side + c)] == x;
    if (clash) continue;
    cells[static_cast<std::size_t>(cell)] = x;
    if (fill_latin(cells, side, cell + 1, rng)) return true;
  }
  cells[static_cast<std::size_t>(cell)] = -1;
  return false;
}

}  // namespace

FixtureKind fixture_kind_from_string(const std::string& s) {
  if (s == "different-centers") return FixtureKind::different_centers;
  if (s == "same-center") return FixtureKind::same_center;
  if (s == "two-centers") return FixtureKind::two_centers;
  if (s == "identical-trees") return FixtureKind::identical_trees;
  throw std::invalid_argument("unknown fixture kind '" + s + "'");
}

std::string to_string(FixtureKind k) {
  switch (k) {
    case FixtureKind::different_centers: return "different-centers";
    case FixtureKind::same_center: return "same-center";
    case FixtureKind::two_centers: return "two-centers";
    case FixtureKind::identical_trees: return "identical-trees";
  }
  return "?";
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::vector<std::vector<Vertex>> all_center_maps(int n) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> current(static_cast<std::size_t>(n - 1), 0);
  while (true) {
    out.push_back(current);
    int i = n - 2;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - 1) current[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
  }
  return out;
}

ColoredMultigraph shuffle_edges(const ColoredMultigraph& g, std::mt19937_64& rng) {
  auto specs = g.edge_specs();
  shuffle(specs, rng);
  return ColoredMultigraph(g.vertex_count(), specs, g.color_count());
}

std::vector<std::pair<Vertex, Vertex>> random_spanning_tree(int n, std::mt19937_64& rng) {
  if (n < 2) return {};
  if (n == 2) return {{0, 1}};
  std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
  for (auto& x : code) x = static_cast<Vertex>(draw_below(rng, static_cast<std::uint64_t>(n)));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (Vertex x : code) ++degree[x];
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex x : code) {
    const auto leaf = static_cast<Vertex>(std::ranges::find(degree, 1) - degree.begin());
    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
    --degree[leaf];
    --degree[x];
  }
  Vertex a = -1;
  Vertex b = -1;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) (a < 0 ? a : b) = v;
  edges.emplace_back(a, b);
  return edges;
}

LatinSquare random_latin_square(int side, std::mt19937_64& rng) {
  if (side < 1 || side > 8) throw OutOfSupportedRange("random Latin square side must be in [1, 8]");
  std::vector<Color> cells(static_cast<std::size_t>(side * side), -1);
  fill_latin(cells, side, 0, rng);
  return LatinSquare(side, std::move(cells));
}

GraphDocument generate_fixture(FixtureKind kind, int n, std::uint64_t seed) {
  const int min_n = kind == FixtureKind::two_centers ? 3 : 2;
  if (n < min_n || n > 64)
    throw OutOfSupportedRange(to_string(kind) + " needs " + std::to_string(min_n) + " <= n <= 64, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  const int m = n - 1;

  std::vector<Vertex> vertices(static_cast<std::size_t>(n));
  std::iota(vertices.begin(), vertices.end(), 0);
  shuffle(vertices, rng);

  ColoredMultigraph g(1, std::span<const EdgeSpec>{});
  switch (kind) {
    case FixtureKind::different_centers: {
      std::vector<Vertex> centers(vertices.begin(), vertices.begin() + m);
      g = make_star_graph(n, centers);
      break;
    }
    case FixtureKind::same_center: {
      g = make_star_graph(n, std::vector<Vertex>(static_cast<std::size_t>(m), vertices[0]));
      break;
    }
    case FixtureKind::two_centers: {
      const auto n1 = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(m - 1)));
      std::vector<Vertex> centers(static_cast<std::size_t>(m), vertices[1]);
      std::fill(centers.begin(), centers.begin() + n1, vertices[0]);
      shuffle(centers, rng);
      g = make_star_graph(n, centers);
      break;
    }
    case FixtureKind::identical_trees: {
      const auto tree = random_spanning_tree(n, rng);
      std::vector<EdgeSpec> specs;
      for (Color c = 0; c < m; ++c)
        for (const auto& [u, v] : tree) specs.push_back({u, v, c});
      g = ColoredMultigraph(n, specs, m);
      break;
    }
  }
  return {shuffle_edges(g, rng), {}};
}

}  // namespace rainbow
