#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rainbow/latin.hpp"
#include "rainbow/multigraph.hpp"

namespace rainbow {

/// Stars-to-stars for pairwise distinct centers. Part i is the rainbow star
/// centered at center(i): it takes color i's edge to the one center-free
/// vertex and, from every other color c, the edge joining center(c) to
/// center(i). Throws CentersNotDistinct.
RainbowCollection construct_different_centers(const StarConfiguration& cfg);

/// Stars-to-stars for a common center. With leaves L_0 < ... < L_{n-2}, part
/// j takes color k's edge to leaf L_{(j + k) mod (n-1)}; the rainbow matrix is
/// the cyclic square. Throws CentersNotAllEqual.
RainbowCollection construct_same_center(const StarConfiguration& cfg);

/// Every color class is a copy of one spanning tree. Slots are the template's
/// edges, ordered as color 0 lists them.
struct TreeTemplate {
  std::vector<std::pair<Vertex, Vertex>> slots;  // endpoints, min first
  SlotIndexing slot_of_edge;
  /// edge_at[c][s]: color c's copy of slot s.
  std::vector<std::vector<EdgeId>> edge_at;
};

/// Throws ClassesNotIdentical.
TreeTemplate identical_tree_template(const ColoredMultigraph& g);

/// Part i, slot s receives the copy of slot s colored square(i, s).
/// Throws ClassesNotIdentical or InvalidLatinSquare (wrong side).
RainbowCollection construct_identical_trees(const ColoredMultigraph& g, const LatinSquare& square);

/// Star configuration whose centers sit on exactly two vertices.
class TwoCenterConfig {
 public:
  /// `order`, when given, lists every color once; center_k is the center of
  /// its first entry and each center's colors keep the listed order.
  /// Otherwise colors are ascending and center_k is color 0's center.
  /// Throws InvalidTwoCenterConfig.
  static TwoCenterConfig from(const StarConfiguration& cfg, std::optional<std::span<const Color>> order = std::nullopt);

  const StarConfiguration& cfg() const noexcept { return cfg_; }
  Vertex center_k() const noexcept { return center_k_; }
  Vertex center_j() const noexcept { return center_j_; }
  std::span<const Color> colors_k() const noexcept { return colors_k_; }
  std::span<const Color> colors_j() const noexcept { return colors_j_; }

 private:
  TwoCenterConfig(StarConfiguration cfg, Vertex k, Vertex j, std::vector<Color> colors_k, std::vector<Color> colors_j)
      : cfg_(std::move(cfg)), center_k_(k), center_j_(j), colors_k_(std::move(colors_k)), colors_j_(std::move(colors_j)) {}

  StarConfiguration cfg_;
  Vertex center_k_;
  Vertex center_j_;
  std::vector<Color> colors_k_;
  std::vector<Color> colors_j_;
};

/// Rainbow spanning trees (double stars) for two centers. The colors are read
/// as one cycle, colors_k then colors_j. Tree t joins the centers with cycle
/// color t; its i-th non-center vertex (ascending) takes cycle color
/// t + 1 + i, attached to that color's center.
RainbowCollection construct_two_centers(const TwoCenterConfig& tc);


enum class ConstructMethod { automatic, different_centers, same_center, two_centers, identical_trees };

ConstructMethod construct_method_from_string(const std::string& s);
std::string to_string(ConstructMethod m);

struct ConstructOptions {
  /// Two-center color order (see TwoCenterConfig::from).
  std::optional<std::vector<Color>> order;
  /// Identical-trees square; defaults to the cyclic square.
  std::optional<LatinSquare> square;
};

struct ConstructResult {
  ConstructMethod method;  // the method that actually ran
  RainbowCollection collection;
};

/// Runs one constructor. `automatic` looks for rainbow stars only: same-center,
/// then different-centers, otherwise HypothesisViolation (including
/// two-center inputs, which get trees only on explicit request).
ConstructResult construct(const ColoredMultigraph& g, ConstructMethod method, const ConstructOptions& opts = {});

}  // namespace rainbow
