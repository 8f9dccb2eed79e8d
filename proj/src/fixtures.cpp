#include "rainbow/fixtures.hpp"

#include <stdexcept>

namespace rainbow {
namespace {

GraphDocument stars(int n, std::vector<Vertex> centers, std::vector<std::string> names) {
  return {make_star_graph(n, centers), std::move(names)};
}

GraphDocument explicit_graph(int n, std::vector<EdgeSpec> edges, std::vector<std::string> names) {
  const int colors = static_cast<int>(names.size());
  return {ColoredMultigraph(n, edges, colors), std::move(names)};
}

}  // namespace

FixtureCatalog FixtureCatalog::bundled() {
  const std::vector<std::string> rbg = {"red", "blue", "green"};
  const std::vector<std::string> rbgy = {"red", "blue", "green", "yellow"};
  FixtureCatalog cat;
  auto& g = cat.graphs;

  // Vertex 3 is the center-free (black) vertex.
  g.emplace("different_centers_n4", stars(4, {0, 1, 2}, rbg));
  g.emplace("different_centers_n5", stars(5, {0, 1, 2, 3}, rbgy));
  g.emplace("same_center_n4", stars(4, {0, 0, 0}, rbg));
  g.emplace("same_center_n5", stars(5, {0, 0, 0, 0}, rbgy));
  // Red and blue share vertex 0; green sits on vertex 1.
  g.emplace("shared_center_counterexample_n4", stars(4, {0, 0, 1}, rbg));
  // Square corners: 0 top-left, 1 top-right, 2 bottom-left, 3 bottom-right.
  // Template slots: left side 0-2, diagonal 0-3, right side 1-3.
  g.emplace("identical_trees_n4", explicit_graph(4,
                                                 {{0, 2, 0}, {0, 3, 0}, {1, 3, 0},
                                                  {0, 2, 1}, {0, 3, 1}, {1, 3, 1},
                                                  {0, 2, 2}, {0, 3, 2}, {1, 3, 2}},
                                                 rbg));
  // Red and blue on vertex 0, green and yellow on vertex 1.
  g.emplace("two_centers_n5", stars(5, {0, 0, 1, 1}, rbgy));
  // Red 0-2-3-1, blue 0-1-2-3, green 0-3-2-1; vertex 0 has degree 3.
  g.emplace("paths_counterexample_n4", explicit_graph(4,
                                                      {{0, 2, 0}, {2, 3, 0}, {3, 1, 0},
                                                       {0, 1, 1}, {1, 2, 1}, {2, 3, 1},
                                                       {0, 3, 2}, {3, 2, 2}, {2, 1, 2}},
                                                      rbg));
  return cat;
}

const GraphDocument& FixtureCatalog::at(const std::string& name) const {
  const auto it = graphs.find(name);
  if (it == graphs.end()) throw std::out_of_range("no bundled fixture named '" + name + "'");
  return it->second;
}

std::vector<std::string> FixtureCatalog::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : graphs) out.push_back(name);
  return out;
}

}  // namespace rainbow
