#pragma once

#include <map>
#include <string>
#include <vector>

#include "rainbow/graph_io.hpp"

namespace rainbow {

/// The bundled example graphs, keyed by name:
///   different_centers_n4, different_centers_n5, same_center_n4,
///   same_center_n5, shared_center_counterexample_n4, identical_trees_n4,
///   two_centers_n5, paths_counterexample_n4
struct FixtureCatalog {
  std::map<std::string, GraphDocument> graphs;

  static FixtureCatalog bundled();

  const GraphDocument& at(const std::string& name) const;
  std::vector<std::string> names() const;
};

}  // namespace rainbow
