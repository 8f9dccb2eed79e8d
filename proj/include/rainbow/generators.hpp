#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rainbow/graph_io.hpp"
#include "rainbow/latin.hpp"

namespace rainbow {

enum class FixtureKind { different_centers, same_center, two_centers, identical_trees };

FixtureKind fixture_kind_from_string(const std::string& s);
std::string to_string(FixtureKind k);

/// Random instance of the requested family with shuffled edge ids.
/// Deterministic in (kind, n, seed). Throws OutOfSupportedRange for n < 2
/// (n < 3 for two-centers) or n > 64.
GraphDocument generate_fixture(FixtureKind kind, int n, std::uint64_t seed);

/// Uniform integer in [0, bound), independent of the standard library's
/// distribution implementations.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

/// Every map color -> center for n vertices (n^(n-1) of them), in
/// lexicographic order.
std::vector<std::vector<Vertex>> all_center_maps(int n);

ColoredMultigraph shuffle_edges(const ColoredMultigraph& g, std::mt19937_64& rng);

/// Spanning tree on n vertices decoded from a random Pruefer sequence.
std::vector<std::pair<Vertex, Vertex>> random_spanning_tree(int n, std::mt19937_64& rng);

/// Randomized backtracking fill; side <= 8.
LatinSquare random_latin_square(int side, std::mt19937_64& rng);

}  // namespace rainbow
