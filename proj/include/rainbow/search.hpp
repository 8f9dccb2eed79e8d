#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/latin.hpp"
#include "rainbow/multigraph.hpp"

namespace rainbow {

enum class SearchMode { exists, count, enumerate };

std::string to_string(SearchMode m);
SearchMode search_mode_from_string(const std::string& s);

struct SearchRequest {
  Shape shape = Shape::tree;
  SearchMode mode = SearchMode::count;
  /// Cap on returned certificates (enumerate mode only; unset = all).
  std::optional<std::uint64_t> limit;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SearchOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Reject partial assignments as soon as a part breaks its shape. Off means
  /// parts are only checked once complete; counts must not change.
  bool pruning = true;
  /// OpenMP threads for the parallel search; 0 keeps the runtime default.
  int threads = 0;
};

struct SearchReport {
  Shape shape = Shape::tree;
  SearchMode mode = SearchMode::count;
  /// Distinct unordered decompositions. In exists mode capped at 1.
  std::uint64_t count = 0;
  /// Canonical forms, in search order. exists and count modes keep only the
  /// first one as a witness.
  std::vector<RainbowCollection> certificates;
  bool exhausted = false;
  std::uint64_t nodes = 0;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

/// Every decomposition of `g` into n-1 edge-disjoint rainbow spanning
/// subgraphs of the requested shape. Each part takes one edge of every color,
/// so the search fills color classes one at a time as perfect matchings of
/// edges to parts; parts are keyed by their color-0 edge, which makes each
/// unordered decomposition appear exactly once.
///
/// Preconditions: n - 1 colors, each class of size n - 1, g connected;
/// otherwise std::invalid_argument. Exceeding the node budget throws
/// InstanceTooLarge, except in enumerate mode where the partial report comes
/// back with exhausted = false.
///
/// Top-level branches (color 1's matchings) run in parallel; the report is
/// identical to search_decompositions_serial.
SearchReport search_decompositions(const ColoredMultigraph& g, const SearchRequest& req, const SearchOptions& opts = {});

/// Single-threaded reference.
SearchReport search_decompositions_serial(const ColoredMultigraph& g, const SearchRequest& req,
                                          const SearchOptions& opts = {});

/// True iff all centers distinct or all equal (s_k in {0,1} for all k, or
/// some s_k = n-1). O(n), no search.
bool stars_to_stars_feasible(const StarConfiguration& cfg);

/// Number of rainbow star decompositions without searching: 1 for distinct
/// centers, Omega(n) for a shared center, 0 otherwise. Throws
/// CountUnavailable when Omega(n) is out of range.
BigInt count_rainbow_star_decompositions_fast(const StarConfiguration& cfg);

}  // namespace rainbow
