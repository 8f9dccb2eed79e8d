#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/fixtures.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/search.hpp"

using namespace rainbow;

namespace {

const SearchRequest kEnumerateStars{Shape::star, SearchMode::enumerate, std::nullopt};

std::set<oracle::Partition> partitions(const SearchReport& r) {
  std::set<oracle::Partition> out;
  for (const auto& c : r.certificates) out.insert(oracle::as_partition(c));
  return out;
}

// Random graph with n-1 color classes, each a random spanning tree.
ColoredMultigraph random_tree_classes(int n, std::mt19937_64& rng) {
  std::vector<EdgeSpec> specs;
  for (Color c = 0; c < n - 1; ++c)
    for (const auto& [u, v] : random_spanning_tree(n, rng)) specs.push_back({u, v, c});
  return shuffle_edges(ColoredMultigraph(n, specs, n - 1), rng);
}

}  // namespace

TEST_CASE("star search equals the brute-force oracle on every center map, n <= 5") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& centers : all_center_maps(n)) {
      const auto g = make_star_graph(n, centers);
      const auto r = search_decompositions(g, kEnumerateStars);
      const auto expected = oracle::decompositions(g, Shape::star);
      REQUIRE(r.exhausted);
      CHECK(r.count == expected.size());
      CHECK(partitions(r) == expected);
      const auto cfg = as_star_configuration(g);
      CHECK(count_rainbow_star_decompositions_fast(cfg) == r.count);
      CHECK(stars_to_stars_feasible(cfg) == (r.count > 0));
    }
}

TEST_CASE("tree and path search equal the oracle on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 3;
    const auto g = random_tree_classes(n, rng);
    for (auto shape : {Shape::tree, Shape::path, Shape::star}) {
      const auto r = search_decompositions(g, {shape, SearchMode::enumerate, std::nullopt});
      CHECK(partitions(r) == oracle::decompositions(g, shape));
      for (const auto& c : r.certificates) CHECK(check_decomposition(g, c));
    }
  }
}

TEST_CASE("bundled counterexamples") {
  const auto cat = FixtureCatalog::bundled();
  const auto& shared = cat.at("shared_center_counterexample_n4").graph;
  CHECK(search_decompositions(shared, {Shape::star, SearchMode::exists, std::nullopt}).count == 0);
  const auto trees = search_decompositions(shared, {Shape::tree, SearchMode::enumerate, std::nullopt});
  CHECK(trees.count == 2);
  CHECK(partitions(trees) == oracle::decompositions(shared, Shape::tree));

  const auto& paths = cat.at("paths_counterexample_n4").graph;
  CHECK(search_decompositions(paths, {Shape::path, SearchMode::count, std::nullopt}).count == 0);
  CHECK(oracle::decompositions(paths, Shape::path).empty());
}

TEST_CASE("n = 2 single edge") {
  const std::vector<EdgeSpec> e{{0, 1, 0}};
  const ColoredMultigraph g(2, e);
  CHECK(search_decompositions(g, {Shape::star, SearchMode::count, std::nullopt}).count == 1);
}

TEST_CASE("modes: exists caps at one, enumerate honours limit") {
  const auto g = FixtureCatalog::bundled().at("same_center_n5").graph;
  const auto ex = search_decompositions(g, {Shape::star, SearchMode::exists, std::nullopt});
  CHECK(ex.count == 1);
  CHECK(ex.certificates.size() == 1);
  const auto cnt = search_decompositions(g, {Shape::star, SearchMode::count, std::nullopt});
  CHECK(cnt.count == 24);
  CHECK(cnt.certificates.size() == 1);  // one witness
  const auto lim = search_decompositions(g, {Shape::star, SearchMode::enumerate, 5});
  CHECK(lim.certificates.size() == 5);
  const auto all = search_decompositions(g, {Shape::star, SearchMode::enumerate, std::nullopt});
  CHECK(all.count == 24);
  CHECK(all.certificates.size() == 24);
  CHECK(std::equal(lim.certificates.begin(), lim.certificates.end(), all.certificates.begin()));
}

TEST_CASE("parallel search reproduces the serial report exactly") {
  const auto cat = FixtureCatalog::bundled();
  std::mt19937_64 rng(3);
  std::vector<ColoredMultigraph> graphs{cat.at("same_center_n5").graph, cat.at("two_centers_n5").graph,
                                        cat.at("shared_center_counterexample_n4").graph};
  for (int i = 0; i < 10; ++i) graphs.push_back(random_tree_classes(5, rng));
  for (const auto& g : graphs)
    for (auto mode : {SearchMode::exists, SearchMode::count, SearchMode::enumerate}) {
      const SearchRequest req{Shape::tree, mode, std::nullopt};
      const auto serial = search_decompositions_serial(g, req);
      for (int threads : {1, 2, 4}) {
        SearchOptions opts;
        opts.threads = threads;
        CHECK(search_decompositions(g, req, opts) == serial);
      }
      CHECK(search_decompositions(g, req) == search_decompositions(g, req));
    }
}

TEST_CASE("pruning changes nodes, not answers") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_tree_classes(4, rng);
    for (auto shape : {Shape::star, Shape::tree, Shape::path}) {
      const SearchRequest req{shape, SearchMode::enumerate, std::nullopt};
      SearchOptions off;
      off.pruning = false;
      const auto a = search_decompositions(g, req);
      const auto b = search_decompositions(g, req, off);
      CHECK(a.count == b.count);
      CHECK(a.certificates == b.certificates);
      CHECK(a.nodes <= b.nodes);
    }
  }
}

TEST_CASE("node budget") {
  const auto g = FixtureCatalog::bundled().at("same_center_n5").graph;
  SearchOptions tiny;
  tiny.node_budget = 3;
  CHECK_THROWS_AS(search_decompositions(g, {Shape::star, SearchMode::count, std::nullopt}, tiny), InstanceTooLarge);
  CHECK_THROWS_AS(search_decompositions_serial(g, {Shape::star, SearchMode::count, std::nullopt}, tiny), InstanceTooLarge);
  const auto partial = search_decompositions(g, {Shape::star, SearchMode::enumerate, std::nullopt}, tiny);
  CHECK_FALSE(partial.exhausted);
}

TEST_CASE("preconditions") {
  const std::vector<EdgeSpec> two_colors_three_vertices{{0, 1, 0}, {1, 2, 0}, {0, 1, 1}};
  CHECK_THROWS_AS(search_decompositions(ColoredMultigraph(3, two_colors_three_vertices), {}), std::invalid_argument);
  const std::vector<EdgeSpec> disconnected{{0, 1, 0}, {0, 1, 0}, {0, 1, 1}, {0, 1, 1}};
  CHECK_THROWS_AS(search_decompositions(ColoredMultigraph(3, disconnected), {}), std::invalid_argument);
}

TEST_CASE("fast count for shared centers beyond the Omega range") {
  const std::vector<Vertex> centers(8, 0);
  CHECK_THROWS_AS(count_rainbow_star_decompositions_fast(as_star_configuration(make_star_graph(9, centers))),
                  CountUnavailable);
  std::vector<Vertex> distinct(8);
  std::iota(distinct.begin(), distinct.end(), 0);
  CHECK(count_rainbow_star_decompositions_fast(as_star_configuration(make_star_graph(9, distinct))) == 1);
}

TEST_CASE("mode names round trip") {
  for (auto m : {SearchMode::exists, SearchMode::count, SearchMode::enumerate}) CHECK(search_mode_from_string(to_string(m)) == m);
  CHECK_THROWS_AS(search_mode_from_string("all"), std::invalid_argument);
}
