#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "json.hpp"
#include "rainbow/fixtures.hpp"
#include "rainbow/graph_io.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rainbow::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("rainbow_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("validate") {
  auto r = run({"validate", "@same_center_n4"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  auto j = json::parse(r.out);
  CHECK(j["all_stars"] == true);
  CHECK(j["star_centers"] == json::array({0, 0, 0}));

  r = run({"validate", "@paths_counterexample_n4"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["all_paths"] == true);

  const auto loop = temp_file("loop.json", R"({"n": 3, "edges": [[0, 0, 1]]})");
  r = run({"validate", loop});
  CHECK(r.code == 2);
  CHECK(r.err.find("loop at vertex 0") != std::string::npos);

  const auto split = temp_file("split.json", R"({"n": 4, "edges": [[0, 1, 0], [2, 3, 1]]})");
  CHECK(run({"validate", split}).code == 3);
  CHECK(run({"validate", "@nope"}).code == 2);
}

TEST_CASE("construct") {
  auto r = run({"construct", "@different_centers_n4"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["method"] == "different-centers");
  CHECK(j["parts"].size() == 3);

  r = run({"construct", "@shared_center_counterexample_n4"});
  CHECK(r.code == 3);
  CHECK(r.out.empty());
  CHECK(r.err.find("pairwise distinct") != std::string::npos);

  r = run({"construct", "@two_centers_n5", "--method", "two-centers"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["parts"].size() == 4);

  r = run({"construct", "@two_centers_n5", "--method", "two-centers", "--order", "green,yellow,red,blue"});
  CHECK(r.code == 0);
  CHECK(run({"construct", "@two_centers_n5", "--method", "two-centers", "--order", "green,red"}).code == 3);
  CHECK(run({"construct", "@two_centers_n5", "--method", "two-centers", "--order", "purple"}).code == 2);

  r = run({"construct", "@identical_trees_n4", "--method", "identical-trees", "--square", "red,green,blue;blue,red,green;green,blue,red"});
  CHECK(r.code == 0);
  CHECK(run({"construct", "@identical_trees_n4", "--method", "identical-trees", "--square", "0,1,2;0,1,2;0,1,2"}).code == 3);
  CHECK(run({"construct", "@same_center_n4", "--method", "different-centers"}).code == 3);
  CHECK(run({"construct", "@same_center_n4", "--method", "sideways"}).code == 2);

  const auto dot = (std::filesystem::temp_directory_path() / "rainbow_cli_test.dot").string();
  CHECK(run({"construct", "@same_center_n4", "--dot", dot}).code == 0);
  std::ifstream in(dot);
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("graph", 0) == 0);
}

TEST_CASE("search") {
  auto r = run({"search", "@paths_counterexample_n4", "--shape", "path", "--mode", "count"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["count"] == 0);

  r = run({"search", "@shared_center_counterexample_n4", "--shape", "star", "--mode", "exists"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["exists"] == false);

  r = run({"search", "@same_center_n5", "--shape", "star", "--mode", "count"});
  CHECK(json::parse(r.out)["count"] == 24);

  r = run({"search", "@same_center_n5", "--shape", "star", "--mode", "enumerate", "--limit", "3"});
  CHECK(json::parse(r.out)["certificates"].size() == 3);

  r = run({"search", "@same_center_n5", "--shape", "star", "--budget", "2"});
  CHECK(r.code == 5);
  r = run({"search", "@same_center_n5", "--shape", "star", "--mode", "enumerate", "--budget", "2"});
  CHECK(r.code == 5);
  CHECK(json::parse(r.out)["exhausted"] == false);

  CHECK(run({"search", "@same_center_n5", "--shape", "cycle"}).code == 2);
  const auto bad = temp_file("bad.json", R"({"n": 3, "edges": [[0, 1, 0]]})");
  CHECK(run({"search", bad}).code == 3);
}

TEST_CASE("count-omega") {
  auto r = run({"count-omega", "6", "--route", "reduced"});
  CHECK(r.code == 0);
  CHECK(r.out == "1344\n");
  CHECK(run({"count-omega", "4", "--route", "permanent"}).out == "2\n");
  CHECK(run({"count-omega", "3", "--route", "search"}).out == "1\n");
  CHECK(run({"count-omega", "1"}).out == "1\n");
  CHECK(run({"count-omega", "9"}).code == 6);
  CHECK(run({"count-omega", "6", "--route", "permanent"}).code == 6);
  CHECK(run({"count-omega", "9", "--route", "search"}).code == 6);
  CHECK(run({"count-omega", "4", "--route", "guess"}).code == 2);
}

TEST_CASE("gen") {
  auto r = run({"gen", "same-center", "4", "--seed", "0"});
  CHECK(r.code == 0);
  const auto doc = rainbow::parse_graph_document(r.out);
  CHECK(rainbow::emit_graph_document(doc) == r.out);
  CHECK(run({"gen", "same-center", "4", "--seed", "0"}).out == r.out);
  CHECK(run({"gen", "two-centers", "2"}).code == 6);
  CHECK(run({"gen", "triangle", "4"}).code == 2);

  // Generated files feed back into the other commands.
  const auto path = temp_file("gen.json", run({"gen", "two-centers", "6", "--seed", "3"}).out);
  CHECK(run({"construct", path, "--method", "two-centers"}).code == 0);
  CHECK(run({"search", path, "--shape", "tree", "--mode", "exists"}).code == 0);
}

TEST_CASE("verify-paper is deterministic and passes") {
  const auto a = run({"verify-paper", "--max-omega-n", "7"});
  const auto b = run({"verify-paper", "--max-omega-n", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("FAIL") == std::string::npos);
  CHECK(a.err.empty());
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"search", "--help"}).code == 0);
}
