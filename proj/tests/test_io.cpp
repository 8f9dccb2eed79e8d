#include "doctest.h"

#include <fstream>
#include <sstream>

#include "rainbow/constructors.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/fixtures.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph_io.hpp"

using namespace rainbow;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("parse a minimal document") {
  const auto doc = parse_graph_document(R"({"n": 3, "edges": [[0, 1, 0], [1, 2, 0], [0, 2, 1], [0, 1, 1]]})");
  CHECK(doc.graph.vertex_count() == 3);
  CHECK(doc.graph.edge_count() == 4);
  CHECK(doc.graph.color_count() == 2);
  CHECK(doc.color_names.empty());
  CHECK(doc.color_name(1) == "1");
}

TEST_CASE("canonical emission") {
  const auto doc = parse_graph_document(R"({"color_names":["red","blue"],"n":3,"edges":[[0,1,0],[1,2,0],[0,2,1],[2,1,1]]})");
  CHECK(emit_graph_document(doc) ==
        "{\n"
        "  \"n\": 3,\n"
        "  \"color_names\": [\"red\", \"blue\"],\n"
        "  \"edges\": [\n"
        "    [0, 1, 0],\n"
        "    [1, 2, 0],\n"
        "    [0, 2, 1],\n"
        "    [2, 1, 1]\n"
        "  ]\n"
        "}\n");
  CHECK(emit_graph_document(parse_graph_document(R"({"n": 1, "edges": []})")) == "{\n  \"n\": 1,\n  \"edges\": []\n}\n");
}

TEST_CASE("color names fix the color count") {
  const auto doc = parse_graph_document(R"({"n": 2, "edges": [[0, 1, 0]], "color_names": ["a", "b", "c"]})");
  CHECK(doc.graph.color_count() == 3);
  CHECK(doc.color_name(2) == "c");
}

TEST_CASE("parse errors carry locations") {
  CHECK_THROWS_WITH_AS(parse_graph_document("{\n  \"n\": 3,\n  \"edges\": [\n    [0, 1, 0],,\n  ]\n}"),
                       doctest::Contains("line 4"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph_document(R"({"n": 3, "edges": [[0, 1, 0], [0, 0, 1]]})"),
                       doctest::Contains("edges[1]: loop at vertex 0"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph_document(R"({"n": 3, "edges": [[0, 5, 0]]})"), doctest::Contains("edges[0][1]"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_graph_document(R"({"n": 3, "edges": [[0, 1]]})"), doctest::Contains("edges[0]"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph_document(R"({"n": 3, "edges": [[0, 1, "red"]]})"), doctest::Contains("edges[0][2]"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_graph_document(R"({"n": 3, "edges": [], "extra": 1})"), doctest::Contains("extra"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph_document(R"({"edges": []})"), doctest::Contains("n"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph_document(R"({"n": 2, "edges": [[0, 1, 2]], "color_names": ["a"]})"),
                       doctest::Contains("color_names"), ParseError);
  CHECK_THROWS_AS(parse_graph_document("[1, 2]"), ParseError);
  CHECK_THROWS_AS(load_graph_document("/nonexistent/graph.json"), ParseError);
}

TEST_CASE("bundled fixtures round trip and match the files on disk") {
  const auto cat = FixtureCatalog::bundled();
  CHECK(cat.names().size() == 8);
  for (const auto& name : cat.names()) {
    CAPTURE(name);
    const auto& doc = cat.at(name);
    const auto text = emit_graph_document(doc);
    CHECK(parse_graph_document(text) == doc);
    CHECK(emit_graph_document(parse_graph_document(text)) == text);
    CHECK(read_file(std::string(RAINBOW_FIXTURE_DIR) + "/" + name + ".json") == text);
  }
  CHECK_THROWS(cat.at("no_such_fixture"));
}

TEST_CASE("generated documents round trip byte for byte") {
  for (auto kind : {FixtureKind::different_centers, FixtureKind::same_center, FixtureKind::two_centers,
                    FixtureKind::identical_trees})
    for (int n = 3; n <= 9; ++n)
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto text = emit_graph_document(generate_fixture(kind, n, seed));
        CHECK(emit_graph_document(parse_graph_document(text)) == text);
      }
}

TEST_CASE("DOT output") {
  const auto cat = FixtureCatalog::bundled();
  const auto& doc = cat.at("different_centers_n4");
  const auto dot = graph_to_dot(doc);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("color=\"red\"") != std::string::npos);
  CHECK(dot.find("color=\"black\"") == std::string::npos);
  const auto coll = construct(doc.graph, ConstructMethod::automatic).collection;
  const auto cdot = collection_to_dot(doc, coll);
  CHECK(cdot.find("cluster_0") != std::string::npos);
  CHECK(cdot.find("cluster_2") != std::string::npos);
  // Unnamed colors still get a DOT color.
  CHECK_FALSE(dot_color(generate_fixture(FixtureKind::same_center, 5, 0), 3).empty());
}

TEST_CASE("JSON reports") {
  const auto cat = FixtureCatalog::bundled();
  const auto& same = cat.at("same_center_n4");
  const auto v = report_to_json(validate_graph(same.graph), same);
  CHECK(v["all_stars"] == true);
  CHECK(v["distinct_centers"] == 1);
  CHECK(v["classes"][0]["name"] == "red");

  const auto coll = construct(same.graph, ConstructMethod::same_center).collection;
  const auto c = collection_to_json(same, coll);
  CHECK(c["parts"].size() == 3);
  CHECK(c["parts"][0]["center"] == 0);
  CHECK(c["parts"][0]["colors"][0] == "red");

  const auto s = search_report_to_json(same, search_decompositions(same.graph, {Shape::star, SearchMode::count, std::nullopt}));
  CHECK(s["count"] == 2);
  CHECK(s["exists"] == true);
  CHECK(s["exhausted"] == true);
}
