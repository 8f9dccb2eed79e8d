#include "rainbow/claims.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "rainbow/constructors.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/latin.hpp"
#include "rainbow/search.hpp"

namespace rainbow {
namespace {

using Parts = std::vector<std::vector<EdgeId>>;

RainbowCollection collection_of(const Parts& parts, Shape shape) {
  RainbowCollection c;
  for (const auto& p : parts) c.parts.push_back({p, shape});
  return c;
}

std::string describe(const RainbowCollection& c) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    out << (i ? " " : "") << "[";
    for (std::size_t j = 0; j < c.parts[i].edges.size(); ++j) out << (j ? "," : "") << c.parts[i].edges[j];
    out << "]";
  }
  out << "}";
  return out.str();
}

std::string mismatch(const RainbowCollection& got, const RainbowCollection& want) {
  return "got " + describe(canonicalize(got)) + ", expected " + describe(canonicalize(want));
}

std::string expect_count(const ColoredMultigraph& g, Shape shape, SearchMode mode, std::uint64_t want) {
  const auto r = search_decompositions(g, {shape, mode, std::nullopt});
  if (r.count != want) return "search found " + std::to_string(r.count) + ", expected " + std::to_string(want);
  for (const auto& cert : r.certificates)
    if (const auto chk = check_decomposition(g, cert); !chk) return "invalid certificate: " + chk.failure;
  return {};
}

std::string expect_big(const BigInt& got, const BigInt& want) {
  if (got == want) return {};
  return "got " + got.str() + ", expected " + want.str();
}

// Colors of the parts, in part order, compared against literal rows.
std::string expect_matrix(const LatinSquare& got, const std::vector<std::vector<Color>>& want) {
  if (got.rows() == want) return {};
  std::ostringstream out;
  out << "matrix rows differ:";
  for (const auto& row : got.rows()) {
    out << " [";
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
    out << "]";
  }
  return out.str();
}

std::string validated(const ColoredMultigraph& g, const RainbowCollection& c) {
  const auto chk = check_decomposition(g, c);
  return chk ? std::string{} : "certificate check failed: " + chk.failure;
}

}  // namespace

std::vector<ClaimResult> run_claims(const FixtureCatalog& cat, const ClaimOptions& opts) {
  std::vector<ClaimResult> out;
  auto claim = [&out](std::string id, std::string description, const std::function<std::string()>& body) {
    ClaimResult r{std::move(id), std::move(description), false, {}};
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  };

  const auto& dc4 = cat.at("different_centers_n4").graph;
  const auto& dc5 = cat.at("different_centers_n5").graph;
  const auto& sc4 = cat.at("same_center_n4").graph;
  const auto& sc5 = cat.at("same_center_n5").graph;
  const auto& shared = cat.at("shared_center_counterexample_n4").graph;
  const auto& trees = cat.at("identical_trees_n4").graph;
  const auto& two = cat.at("two_centers_n5").graph;
  const auto& paths = cat.at("paths_counterexample_n4").graph;

  claim("validate.different-centers", "n=4 distinct-center graph: connected, 3 colors, 3 stars on distinct centers", [&] {
    const auto r = validate_graph(dc4);
    if (!r.connected || !r.color_count_matches || !r.all_stars()) return std::string("not a connected 3-star configuration");
    return as_star_configuration(dc4).centers_all_distinct() ? std::string{} : std::string("centers repeat");
  });
  claim("validate.shared-center", "n=4 counterexample: all classes stars, two of them on one center", [&] {
    const auto r = validate_graph(shared);
    if (!r.all_stars()) return std::string("some class is not a star");
    const auto cfg = as_star_configuration(shared);
    std::vector<Vertex> centers(cfg.centers().begin(), cfg.centers().end());
    std::ranges::sort(centers);
    const bool shape_ok = centers.size() == 3 && centers[0] == centers[1] && centers[1] != centers[2];
    return shape_ok ? std::string{} : std::string("center multiset is not {v, v, w}");
  });
  claim("validate.paths", "paths counterexample: every class a spanning path, none a star", [&] {
    const auto r = validate_graph(paths);
    if (!r.all_paths()) return std::string("some class is not a spanning path");
    return std::ranges::none_of(r.classes, [](const ClassReport& c) { return c.shape == ClassShape::star; })
               ? std::string{}
               : std::string("a class is a star");
  });
  claim("centers.same-center", "n=4 shared-center graph: all three stars centered on one vertex", [&] {
    return as_star_configuration(sc4).centers_all_equal() ? std::string{} : std::string("centers differ");
  });
  claim("degree.same-center", "degree profile: center s=3, D=9; leaves s=0, D=3", [&] {
    const auto cfg = as_star_configuration(sc4);
    const auto prof = vertex_degree_profile(cfg);
    for (Vertex v = 0; v < cfg.n(); ++v) {
      const DegreeEntry want = v == cfg.center(0) ? DegreeEntry{3, 9} : DegreeEntry{0, 3};
      if (!(prof[v] == want) || sc4.degree(v) != want.degree)
        return "vertex " + std::to_string(v) + ": s=" + std::to_string(prof[v].stars_centered) +
               " D=" + std::to_string(prof[v].degree) + " actual=" + std::to_string(sc4.degree(v));
    }
    return std::string{};
  });

  claim("construct.different-centers", "distinct centers n=4: the three depicted rainbow stars", [&] {
    const auto got = construct_different_centers(as_star_configuration(dc4));
    const auto want = collection_of({{2, 3, 6}, {0, 5, 7}, {1, 4, 8}}, Shape::star);
    if (auto err = validated(dc4, got); !err.empty()) return err;
    return same_decomposition(got, want) ? std::string{} : mismatch(got, want);
  });
  claim("construct.different-centers-n5", "distinct centers n=5: four rainbow stars, the only decomposition", [&] {
    const auto got = construct_different_centers(as_star_configuration(dc5));
    if (auto err = validated(dc5, got); !err.empty()) return err;
    const auto r = search_decompositions(dc5, {Shape::star, SearchMode::enumerate, std::nullopt});
    if (r.count != 1) return "search found " + std::to_string(r.count) + " decompositions";
    return same_decomposition(got, r.certificates.front()) ? std::string{} : mismatch(got, r.certificates.front());
  });
  claim("construct.same-center", "shared center n=4: rotated stars with matrix [[R,B,G],[G,R,B],[B,G,R]]", [&] {
    const auto cfg = as_star_configuration(sc4);
    const auto got = construct_same_center(cfg);
    if (auto err = validated(sc4, got); !err.empty()) return err;
    const auto want = collection_of({{0, 4, 8}, {1, 5, 6}, {2, 3, 7}}, Shape::star);
    if (got != want) return mismatch(got, want);
    return expect_matrix(rainbow_matrix_of(sc4, got, same_center_slots(cfg)), {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}});
  });
  claim("construct.identical-trees-left", "identical trees n=4, square [[R,B,G],[G,R,B],[B,G,R]]: top collection", [&] {
    const auto got = construct_identical_trees(trees, LatinSquare({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}));
    if (auto err = validated(trees, got); !err.empty()) return err;
    const auto want = collection_of({{0, 4, 8}, {1, 5, 6}, {2, 3, 7}}, Shape::tree);
    return same_decomposition(got, want) ? std::string{} : mismatch(got, want);
  });
  claim("construct.identical-trees-right", "identical trees n=4, square [[R,G,B],[B,R,G],[G,B,R]]: bottom collection", [&] {
    const auto got = construct_identical_trees(trees, LatinSquare({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}));
    if (auto err = validated(trees, got); !err.empty()) return err;
    const auto want = collection_of({{0, 5, 7}, {1, 3, 8}, {2, 4, 6}}, Shape::tree);
    return same_decomposition(got, want) ? std::string{} : mismatch(got, want);
  });
  claim("construct.two-centers", "two centers n=5 (red, blue | green, yellow): the four depicted trees", [&] {
    const auto got = construct_two_centers(TwoCenterConfig::from(as_star_configuration(two)));
    if (auto err = validated(two, got); !err.empty()) return err;
    const auto want = collection_of({{0, 5, 10, 15}, {3, 4, 9, 14}, {2, 7, 8, 13}, {1, 6, 11, 12}}, Shape::tree);
    return same_decomposition(got, want) ? std::string{} : mismatch(got, want);
  });
  claim("construct.auto-refuses-shared", "auto construction refuses the shared-center counterexample", [&] {
    try {
      construct(shared, ConstructMethod::automatic);
    } catch (const HypothesisViolation&) {
      return std::string{};
    }
    return std::string("a constructor accepted the graph");
  });

  claim("search.unique-different-centers", "distinct centers n=4: exactly one rainbow star decomposition",
        [&] { return expect_count(dc4, Shape::star, SearchMode::count, 1); });
  claim("search.same-center-n4", "shared center n=4: exactly 2 unordered rainbow star collections",
        [&] { return expect_count(sc4, Shape::star, SearchMode::count, 2); });
  claim("search.same-center-n5", "shared center n=5: 24 rainbow star collections",
        [&] { return expect_count(sc5, Shape::star, SearchMode::count, 24); });
  claim("search.shared-center-no-stars", "counterexample: no decomposition into rainbow stars",
        [&] { return expect_count(shared, Shape::star, SearchMode::exists, 0); });
  claim("search.shared-center-trees", "counterexample: rainbow trees exist, including the depicted one", [&] {
    const auto r = search_decompositions(shared, {Shape::tree, SearchMode::enumerate, std::nullopt});
    if (r.count == 0) return std::string("no tree decomposition");
    const auto want = canonicalize(collection_of({{1, 3, 8}, {2, 4, 6}, {0, 5, 7}}, Shape::tree));
    return std::ranges::find(r.certificates, want) != r.certificates.end() ? std::string{}
                                                                           : std::string("depicted trees not found");
  });
  claim("search.paths-none", "paths counterexample: no decomposition into rainbow spanning paths",
        [&] { return expect_count(paths, Shape::path, SearchMode::count, 0); });

  claim("feasible.characterization", "star feasibility: distinct true, shared-center false, same-center true", [&] {
    const bool a = stars_to_stars_feasible(as_star_configuration(dc4));
    const bool b = stars_to_stars_feasible(as_star_configuration(shared));
    const bool c = stars_to_stars_feasible(as_star_configuration(sc4));
    return a && !b && c ? std::string{} : std::string("unexpected feasibility verdict");
  });
  claim("count.fast", "closed-form counts: distinct n=5 -> 1, same-center n=5 -> 24, counterexample -> 0", [&] {
    if (auto e = expect_big(count_rainbow_star_decompositions_fast(as_star_configuration(dc5)), 1); !e.empty()) return e;
    if (auto e = expect_big(count_rainbow_star_decompositions_fast(as_star_configuration(sc5)), 24); !e.empty()) return e;
    return expect_big(count_rainbow_star_decompositions_fast(as_star_configuration(shared)), 0);
  });

  claim("omega.table", "Omega(n) for n = 1.." + std::to_string(opts.max_omega_n) + " matches the published table", [&] {
    const std::vector<BigInt> table = {1, 1, 1, 2, 24, 1344, 1128960, BigInt("12198297600")};
    for (int n = 1; n <= std::min<int>(opts.max_omega_n, static_cast<int>(table.size())); ++n)
      if (auto e = expect_big(count_omega(n), table[static_cast<std::size_t>(n - 1)]); !e.empty())
        return "n=" + std::to_string(n) + ": " + e;
    return std::string{};
  });
  claim("latin.counts", "L_3 = 12 and L_5 = 161280", [&] {
    if (auto e = expect_big(count_latin_squares(3), 12); !e.empty()) return e;
    return expect_big(count_latin_squares(5), 161280);
  });
  claim("latin.permanent", "permanent formula: L_4 = 576 and the signed sum for side 3 gives Omega(4) = 2", [&] {
    if (auto e = expect_big(count_latin_via_permanent(4), 576); !e.empty()) return e;
    return expect_big(omega_via_permanent(4), 2);
  });
  return out;
}

std::string format_claims(const std::vector<ClaimResult>& results) {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.id.size());
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    out << (r.passed ? "PASS  " : "FAIL  ") << r.id << std::string(width - r.id.size() + 2, ' ') << r.description;
    if (!r.passed) out << ": " << r.detail;
    out << "\n";
  }
  out << passed << "/" << results.size() << " claims passed\n";
  return out.str();
}

}  // namespace rainbow
