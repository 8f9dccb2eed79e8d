#include "cli_app.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "rainbow/constructors.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/fixtures.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/latin.hpp"
#include "rainbow/claims.hpp"
#include "rainbow/search.hpp"

namespace rainbow::cli {
namespace {

using nlohmann::json;

// Search route for count-omega; above this the same-center search is too slow
// to be useful.
constexpr int kMaxSearchRouteN = 6;

/// A command failed with a specific exit code; the message goes to stderr.
struct Failure {
  int code;
  std::string message;
};

GraphDocument load(const std::string& path) {
  if (!path.empty() && path.front() == '@') {
    const auto catalog = FixtureCatalog::bundled();
    const auto name = path.substr(1);
    if (!catalog.graphs.contains(name)) {
      std::string known;
      for (const auto& n : catalog.names()) known += (known.empty() ? "" : ", ") + n;
      throw Failure{kUsageOrParse, "unknown fixture '" + name + "' (bundled: " + known + ")"};
    }
    return catalog.at(name);
  }
  return load_graph_document(path);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string{} : item.substr(b, e - b + 1));
  }
  return out;
}

// A color token is a color id or one of the document's color names.
Color parse_color(const GraphDocument& doc, const std::string& token) {
  for (std::size_t i = 0; i < doc.color_names.size(); ++i)
    if (doc.color_names[i] == token) return static_cast<Color>(i);
  try {
    std::size_t used = 0;
    const int c = std::stoi(token, &used);
    if (used == token.size() && c >= 0 && c < doc.graph.color_count()) return c;
  } catch (const std::exception&) {
  }
  throw Failure{kUsageOrParse, "unknown color '" + token + "'"};
}

std::vector<Color> parse_order(const GraphDocument& doc, const std::string& text) {
  std::vector<Color> out;
  for (const auto& t : split(text, ',')) out.push_back(parse_color(doc, t));
  return out;
}

// Rows separated by ';', entries by ','.
LatinSquare parse_square(const GraphDocument& doc, const std::string& text) {
  std::vector<std::vector<Color>> rows;
  for (const auto& row : split(text, ';')) {
    rows.emplace_back();
    for (const auto& t : split(row, ',')) rows.back().push_back(parse_color(doc, t));
  }
  return LatinSquare(rows);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Failure{kUsageOrParse, "cannot write " + path};
  f << text;
}

void self_check(const ColoredMultigraph& g, const RainbowCollection& c) {
  if (const auto chk = check_decomposition(g, c); !chk)
    throw Failure{kCertificate, "internal certificate check failed: " + chk.failure};
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto doc = load(path);
  const auto report = validate_graph(doc.graph);
  out << report_to_json(report, doc).dump(2) << "\n";
  if (!report.connected) {
    err << "graph is not connected\n";
    return kHypothesis;
  }
  return kOk;
}

struct ConstructArgs {
  std::string path;
  std::string method = "auto";
  std::string order;
  std::string square;
  std::string dot;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const auto doc = load(a.path);
  ConstructOptions opts;
  if (!a.order.empty()) opts.order = parse_order(doc, a.order);
  if (!a.square.empty()) opts.square = parse_square(doc, a.square);
  const auto result = construct(doc.graph, construct_method_from_string(a.method), opts);
  self_check(doc.graph, result.collection);
  json j = collection_to_json(doc, result.collection);
  j["method"] = to_string(result.method);
  out << j.dump(2) << "\n";
  if (!a.dot.empty()) write_file(a.dot, collection_to_dot(doc, result.collection));
  return kOk;
}

struct SearchArgs {
  std::string path;
  std::string shape = "tree";
  std::string mode = "count";
  std::optional<std::uint64_t> limit;
  std::uint64_t budget = kDefaultNodeBudget;
  std::string dot;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  const auto doc = load(a.path);
  const SearchRequest req{shape_from_string(a.shape), search_mode_from_string(a.mode), a.limit};
  SearchReport report;
  try {
    report = search_decompositions(doc.graph, req, SearchOptions{a.budget});
  } catch (const std::invalid_argument& e) {
    throw Failure{kHypothesis, e.what()};
  }
  for (const auto& cert : report.certificates) self_check(doc.graph, cert);
  out << search_report_to_json(doc, report).dump(2) << "\n";
  if (!a.dot.empty())
    write_file(a.dot, report.certificates.empty() ? graph_to_dot(doc) : collection_to_dot(doc, report.certificates.front()));
  if (!report.exhausted) {
    err << "node budget of " << a.budget << " exhausted; report is partial\n";
    return kBudget;
  }
  return kOk;
}

int cmd_count_omega(int n, const std::string& route, bool allow_long, std::uint64_t budget, std::ostream& out) {
  BigInt value;
  if (route == "reduced") {
    value = count_omega(n);
  } else if (route == "permanent") {
    value = omega_via_permanent(n, PermanentRouteOptions{allow_long});
  } else {
    if (n < 2 || n > kMaxSearchRouteN)
      throw OutOfSupportedRange("search route supports 2 <= n <= " + std::to_string(kMaxSearchRouteN));
    const std::vector<Vertex> centers(static_cast<std::size_t>(n - 1), 0);
    const auto g = make_star_graph(n, centers);
    value = search_decompositions(g, {Shape::star, SearchMode::count, std::nullopt}, SearchOptions{budget}).count;
  }
  out << value.str() << "\n";
  return kOk;
}

int cmd_verify(int max_omega_n, std::ostream& out, std::ostream& err) {
  const auto results = run_claims(FixtureCatalog::bundled(), ClaimOptions{max_omega_n});
  out << format_claims(results);
  int failed = 0;
  for (const auto& r : results) failed += !r.passed;
  if (failed == 0) return kOk;
  err << failed << " claim(s) failed:";
  for (const auto& r : results)
    if (!r.passed) err << " " << r.id;
  err << "\n";
  return kVerifyFailed;
}

int cmd_gen(const std::string& kind, int n, std::uint64_t seed, std::ostream& out) {
  out << emit_graph_document(generate_fixture(fixture_kind_from_string(kind), n, seed));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow decompositions of edge-colored multigraphs", "rainbow"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "rainbow 1.0.0");

  const std::string path_help = "graph file, or @name for a bundled fixture";

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "check a graph file and describe its color classes");
  validate->add_option("path", validate_path, path_help)->required();

  ConstructArgs ca;
  auto* constructc = app.add_subcommand("construct", "build a rainbow decomposition with a direct construction");
  constructc->add_option("path", ca.path, path_help)->required();
  constructc->add_option("--method", ca.method, "auto, different-centers, same-center, two-centers, identical-trees")
      ->capture_default_str();
  constructc->add_option("--order", ca.order, "two-centers color order, comma separated ids or names");
  constructc->add_option("--square", ca.square, "identical-trees Latin square, rows ';' separated, entries ','");
  constructc->add_option("--dot", ca.dot, "also write the decomposition as DOT to this file");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "exhaustively search for rainbow decompositions");
  search->add_option("path", sa.path, path_help)->required();
  search->add_option("--shape", sa.shape, "star, tree or path")->check(CLI::IsMember({"star", "tree", "path"}))
      ->capture_default_str();
  search->add_option("--mode", sa.mode, "exists, count or enumerate")
      ->check(CLI::IsMember({"exists", "count", "enumerate"}))
      ->capture_default_str();
  search->add_option("--limit", sa.limit, "maximum certificates returned in enumerate mode");
  search->add_option("--budget", sa.budget, "search node cap")->capture_default_str();
  search->add_option("--dot", sa.dot, "write the first certificate (or the graph) as DOT to this file");

  int omega_n = 0;
  std::string route = "reduced";
  bool allow_long = false;
  std::uint64_t omega_budget = kDefaultNodeBudget;
  auto* omega = app.add_subcommand("count-omega", "number of rainbow star collections for a shared center");
  omega->add_option("n", omega_n, "vertex count")->required();
  omega->add_option("--route", route, "reduced, permanent or search")
      ->check(CLI::IsMember({"reduced", "permanent", "search"}))
      ->capture_default_str();
  omega->add_flag("--long", allow_long, "permit the slow permanent route at n = 6");
  omega->add_option("--budget", omega_budget, "search node cap for route=search")->capture_default_str();

  int max_omega_n = kMaxOmegaN;
  auto* verify = app.add_subcommand("verify-paper", "replay every worked example and published value");
  verify->add_option("--max-omega-n", max_omega_n, "largest n in the Omega table check")
      ->check(CLI::Range(1, kMaxOmegaN))
      ->capture_default_str();

  std::string kind;
  int gen_n = 0;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "emit a random graph of a given family");
  gen->add_option("kind", kind, "different-centers, same-center, two-centers, identical-trees")
      ->required()
      ->check(CLI::IsMember({"different-centers", "same-center", "two-centers", "identical-trees"}));
  gen->add_option("n", gen_n, "vertex count")->required();
  gen->add_option("--seed", seed, "random seed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageOrParse;
  }

  try {
    if (*validate) return cmd_validate(validate_path, out, err);
    if (*constructc) return cmd_construct(ca, out);
    if (*search) return cmd_search(sa, out, err);
    if (*omega) return cmd_count_omega(omega_n, route, allow_long, omega_budget, out);
    if (*verify) return cmd_verify(max_omega_n, out, err);
    if (*gen) return cmd_gen(kind, gen_n, seed, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageOrParse;
  } catch (const InvalidGraph& e) {
    err << "invalid graph: " << e.what() << "\n";
    return kUsageOrParse;
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    return kHypothesis;
  } catch (const NotMatrixEncodable& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    return kHypothesis;
  } catch (const InstanceTooLarge& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const OutOfSupportedRange& e) {
    err << "out of supported range: " << e.what() << "\n";
    return kOutOfRange;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageOrParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageOrParse;
  }
  return kUsageOrParse;
}

}  // namespace rainbow::cli
