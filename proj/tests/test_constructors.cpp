#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "rainbow/constructors.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/fixtures.hpp"
#include "rainbow/generators.hpp"

using namespace rainbow;

namespace {

RainbowCollection parts_of(std::vector<std::vector<EdgeId>> parts, Shape shape) {
  RainbowCollection c;
  for (auto& p : parts) c.parts.push_back({std::move(p), shape});
  return c;
}

int bridges(const TwoCenterConfig& tc, const RainbowSubgraph& part) {
  const auto& g = tc.cfg().graph();
  int k = 0;
  for (EdgeId id : part.edges) k += g.edge(id).touches(tc.center_k()) && g.edge(id).touches(tc.center_j());
  return k;
}

}  // namespace

TEST_CASE("different centers: depicted n = 4 collection, in row order") {
  const auto g = FixtureCatalog::bundled().at("different_centers_n4").graph;
  const auto got = construct_different_centers(as_star_configuration(g));
  CHECK(check_decomposition(g, got));
  CHECK(same_decomposition(got, parts_of({{2, 3, 6}, {0, 5, 7}, {1, 4, 8}}, Shape::star)));
  // Part i is centered where color i is.
  for (Color c = 0; c < 3; ++c) CHECK(star_centers(g, got.parts[c].edges).front() == c);
}

TEST_CASE("different centers matches the brute-force oracle for n = 3..5") {
  for (int n = 3; n <= 5; ++n) {
    std::vector<Vertex> centers(static_cast<std::size_t>(n - 1));
    std::iota(centers.begin(), centers.end(), 1);
    const auto g = make_star_graph(n, centers);
    const auto got = construct_different_centers(as_star_configuration(g));
    const auto all = oracle::decompositions(g, Shape::star);
    REQUIRE(all.size() == 1);
    CHECK(oracle::as_partition(got) == *all.begin());
  }
}

TEST_CASE("different centers refuses a shared center") {
  const std::vector<Vertex> centers{0, 0, 1};
  CHECK_THROWS_AS(construct_different_centers(as_star_configuration(make_star_graph(4, centers))), CentersNotDistinct);
}

TEST_CASE("same center: rotation with the cyclic matrix") {
  const auto g = FixtureCatalog::bundled().at("same_center_n4").graph;
  const auto cfg = as_star_configuration(g);
  const auto got = construct_same_center(cfg);
  CHECK(got == parts_of({{0, 4, 8}, {1, 5, 6}, {2, 3, 7}}, Shape::star));
  CHECK(rainbow_matrix_of(g, got, same_center_slots(cfg)) == LatinSquare::cyclic(3));

  for (int n = 2; n <= 7; ++n) {
    const std::vector<Vertex> centers(static_cast<std::size_t>(n - 1), static_cast<Vertex>(n / 2));
    const auto gn = make_star_graph(n, centers);
    const auto c = as_star_configuration(gn);
    const auto out = construct_same_center(c);
    CHECK(check_decomposition(gn, out));
    CHECK(rainbow_matrix_of(gn, out, same_center_slots(c)) == LatinSquare::cyclic(n - 1));
  }
}

TEST_CASE("same center output is one of the oracle's collections") {
  const std::vector<Vertex> centers{3, 3, 3, 3};
  const auto g = make_star_graph(5, centers);
  const auto all = oracle::decompositions(g, Shape::star);
  CHECK(all.size() == 24);
  CHECK(all.contains(oracle::as_partition(construct_same_center(as_star_configuration(g)))));
}

TEST_CASE("same center refuses distinct centers") {
  const std::vector<Vertex> centers{0, 1, 2};
  CHECK_THROWS_AS(construct_same_center(as_star_configuration(make_star_graph(4, centers))), CentersNotAllEqual);
}

TEST_CASE("identical trees: both depicted squares") {
  const auto g = FixtureCatalog::bundled().at("identical_trees_n4").graph;
  const auto left = construct_identical_trees(g, LatinSquare({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}));
  const auto right = construct_identical_trees(g, LatinSquare({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}));
  CHECK(same_decomposition(left, parts_of({{0, 4, 8}, {1, 5, 6}, {2, 3, 7}}, Shape::tree)));
  CHECK(same_decomposition(right, parts_of({{0, 5, 7}, {1, 3, 8}, {2, 4, 6}}, Shape::tree)));
  const auto t = identical_tree_template(g);
  CHECK(rainbow_matrix_of(g, left, t.slot_of_edge) == LatinSquare({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}));
}

TEST_CASE("identical trees: distinct squares give distinct ordered collections") {
  const auto g = FixtureCatalog::bundled().at("identical_trees_n4").graph;
  const auto t = identical_tree_template(g);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_latin_square(3, rng);
    const auto b = random_latin_square(3, rng);
    const auto ca = construct_identical_trees(g, a);
    CHECK((ca == construct_identical_trees(g, b)) == (a == b));
    CHECK(rainbow_matrix_of(g, ca, t.slot_of_edge) == a);
  }
}

TEST_CASE("identical trees: random templates and squares validate") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(draw_below(rng, 5));
    const auto doc = generate_fixture(FixtureKind::identical_trees, n, rng());
    const auto out = construct_identical_trees(doc.graph, random_latin_square(n - 1, rng));
    CHECK(check_decomposition(doc.graph, out));
  }
}

TEST_CASE("identical trees refuses mismatched classes and squares") {
  const auto cat = FixtureCatalog::bundled();
  CHECK_THROWS_AS(identical_tree_template(cat.at("paths_counterexample_n4").graph), ClassesNotIdentical);
  CHECK_THROWS_AS(construct_identical_trees(cat.at("identical_trees_n4").graph, LatinSquare::cyclic(4)), InvalidLatinSquare);
  CHECK_THROWS_AS(LatinSquare({{0, 1}, {0, 1}}), InvalidLatinSquare);
}

TEST_CASE("two centers: depicted n = 5 trees") {
  const auto g = FixtureCatalog::bundled().at("two_centers_n5").graph;
  const auto tc = TwoCenterConfig::from(as_star_configuration(g));
  CHECK(tc.center_k() == 0);
  CHECK(tc.center_j() == 1);
  const auto got = construct_two_centers(tc);
  CHECK(check_decomposition(g, got));
  CHECK(same_decomposition(got, parts_of({{0, 5, 10, 15}, {3, 4, 9, 14}, {2, 7, 8, 13}, {1, 6, 11, 12}}, Shape::tree)));
}

TEST_CASE("two centers: explicit order picks center_k and the cycle") {
  const auto g = FixtureCatalog::bundled().at("two_centers_n5").graph;
  const std::vector<Color> order{3, 2, 1, 0};
  const auto tc = TwoCenterConfig::from(as_star_configuration(g), std::span<const Color>(order));
  CHECK(tc.center_k() == 1);
  CHECK(std::vector<Color>(tc.colors_k().begin(), tc.colors_k().end()) == std::vector<Color>{3, 2});
  CHECK(check_decomposition(g, construct_two_centers(tc)));

  const std::vector<Color> bad{0, 0, 1, 2};
  CHECK_THROWS_AS(TwoCenterConfig::from(as_star_configuration(g), std::span<const Color>(bad)), InvalidTwoCenterConfig);
}

TEST_CASE("two centers: every split and random order, n = 3..7") {
  std::mt19937_64 rng(2024);
  int cases = 0;
  for (int n = 3; n <= 7; ++n)
    for (int n1 = 1; n1 <= n - 2; ++n1)
      for (int rep = 0; rep < 14; ++rep) {
        std::vector<Vertex> centers(static_cast<std::size_t>(n - 1), 1);
        std::fill(centers.begin(), centers.begin() + n1, 0);
        std::shuffle(centers.begin(), centers.end(), rng);
        const auto g = shuffle_edges(make_star_graph(n, centers), rng);
        std::vector<Color> order(static_cast<std::size_t>(n - 1));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const auto tc = TwoCenterConfig::from(as_star_configuration(g), std::span<const Color>(order));
        const auto out = construct_two_centers(tc);
        CHECK(check_decomposition(g, out));
        for (const auto& p : out.parts) CHECK(bridges(tc, p) == 1);
        ++cases;
      }
  CHECK(cases >= 200);
}

TEST_CASE("two centers refuses other center counts") {
  const std::vector<Vertex> three{0, 1, 2, 2};
  CHECK_THROWS_AS(TwoCenterConfig::from(as_star_configuration(make_star_graph(5, three))), InvalidTwoCenterConfig);
}

TEST_CASE("construct dispatch") {
  const auto cat = FixtureCatalog::bundled();
  CHECK(construct(cat.at("different_centers_n4").graph, ConstructMethod::automatic).method == ConstructMethod::different_centers);
  CHECK(construct(cat.at("same_center_n5").graph, ConstructMethod::automatic).method == ConstructMethod::same_center);
  CHECK_THROWS_AS(construct(cat.at("shared_center_counterexample_n4").graph, ConstructMethod::automatic), HypothesisViolation);
  CHECK_THROWS_AS(construct(cat.at("two_centers_n5").graph, ConstructMethod::automatic), HypothesisViolation);
  CHECK(construct(cat.at("two_centers_n5").graph, ConstructMethod::two_centers).collection.parts.size() == 4);
  CHECK(construct(cat.at("shared_center_counterexample_n4").graph, ConstructMethod::two_centers).collection.parts.size() == 3);
  CHECK(construct(cat.at("identical_trees_n4").graph, ConstructMethod::identical_trees).collection ==
        construct_identical_trees(cat.at("identical_trees_n4").graph, LatinSquare::cyclic(3)));
  for (auto m : {ConstructMethod::automatic, ConstructMethod::different_centers, ConstructMethod::same_center,
                 ConstructMethod::two_centers, ConstructMethod::identical_trees})
    CHECK(construct_method_from_string(to_string(m)) == m);
}
