#include "rainbow/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <stdexcept>

#include <omp.h>

#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

void check_search_instance(const ColoredMultigraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("search needs at least 2 vertices");
  if (n > 64) throw std::invalid_argument("search supports at most 64 vertices");
  if (g.color_count() != n - 1)
    throw std::invalid_argument("expected " + std::to_string(n - 1) + " colors, found " + std::to_string(g.color_count()));
  for (Color c = 0; c < g.color_count(); ++c)
    if (static_cast<int>(g.color_class(c).size()) != n - 1)
      throw std::invalid_argument("color " + std::to_string(c) + " has " + std::to_string(g.color_class(c).size()) +
                                  " edges, expected " + std::to_string(n - 1));
  if (!g.connected()) throw std::invalid_argument("graph is not connected");
}

struct Branch {
  std::vector<int> picks;           // color-1 class position taken by each part
  std::uint64_t prefix_nodes = 0;   // root nodes visited up to and including this prefix
};

// Depth-first fill: colors in order, and within a color, parts in order,
// each part taking one unused edge of the class. Per-part rollback
// union-find rejects cycles; degree and common-vertex masks handle the path
// and star shapes.
class Engine {
 public:
  Engine(const ColoredMultigraph& g, const SearchRequest& req, const SearchOptions& opts)
      : g_(g),
        req_(req),
        pruning_(opts.pruning),
        budget_(opts.node_budget),
        n_(g.vertex_count()),
        parts_(n_ - 1),
        colors_(n_ - 1),
        limit_(req.mode == SearchMode::enumerate ? req.limit.value_or(std::numeric_limits<std::uint64_t>::max()) : 1),
        parent_(static_cast<std::size_t>(parts_ * n_)),
        size_(static_cast<std::size_t>(parts_ * n_), 1),
        degree_(static_cast<std::size_t>(parts_ * n_), 0),
        common_(static_cast<std::size_t>(parts_), ~std::uint64_t{0}),
        used_(static_cast<std::size_t>(colors_ * parts_), 0),
        assigned_(static_cast<std::size_t>(parts_ * colors_), kNoEdge) {
    for (int p = 0; p < parts_; ++p)
      for (int v = 0; v < n_; ++v) parent_[idx(p, v)] = v;
    for (int p = 0; p < parts_; ++p) {
      const EdgeId e = g_.color_class(0)[static_cast<std::size_t>(p)];
      apply(p, 0, e);
      used_[static_cast<std::size_t>(p)] = 1;
    }
  }

  void run() { place(1, 0); }

  std::vector<Branch> split() {
    collecting_ = true;
    place(1, 0);
    collecting_ = false;
    return std::move(branches_);
  }

  void run_branch(const Branch& b) {
    for (int p = 0; p < parts_; ++p) {
      const int k = b.picks[static_cast<std::size_t>(p)];
      apply(p, 1, g_.color_class(1)[static_cast<std::size_t>(k)]);
      used_[static_cast<std::size_t>(parts_ + k)] = 1;
    }
    place(2, 0);
  }

  void set_cancel(std::function<bool(std::uint64_t)> poll) { poll_ = std::move(poll); }

  std::uint64_t count() const { return count_; }
  std::uint64_t nodes() const { return nodes_; }
  bool overflowed() const { return overflow_; }
  bool cancelled() const { return cancelled_; }
  std::vector<RainbowCollection>& certificates() { return certificates_; }

 private:
  std::size_t idx(int p, int v) const { return static_cast<std::size_t>(p * n_ + v); }

  int find(int p, int v) const {
    while (parent_[idx(p, v)] != v) v = parent_[idx(p, v)];
    return v;
  }

  bool fits(int p, EdgeId id) const {
    const auto& e = g_.edge(id);
    if (find(p, e.u) == find(p, e.v)) return false;
    switch (req_.shape) {
      case Shape::tree: return true;
      case Shape::path: return degree_[idx(p, e.u)] < 2 && degree_[idx(p, e.v)] < 2;
      case Shape::star: return (common_[p] & ((std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v))) != 0;
    }
    return false;
  }

  struct Undo {
    int merged_child;  // -1 when the endpoints were already joined
    std::uint64_t common;
  };

  Undo apply(int p, int c, EdgeId id) {
    const auto& e = g_.edge(id);
    Undo u{-1, common_[p]};
    int a = find(p, e.u);
    int b = find(p, e.v);
    if (a != b) {
      if (size_[idx(p, a)] < size_[idx(p, b)]) std::swap(a, b);
      parent_[idx(p, b)] = a;
      size_[idx(p, a)] += size_[idx(p, b)];
      u.merged_child = b;
    }
    ++degree_[idx(p, e.u)];
    ++degree_[idx(p, e.v)];
    common_[p] &= (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    assigned_[static_cast<std::size_t>(p * colors_ + c)] = id;
    return u;
  }

  void undo(int p, int c, EdgeId id, const Undo& u) {
    const auto& e = g_.edge(id);
    if (u.merged_child >= 0) {
      const int child = u.merged_child;
      const int root = parent_[idx(p, child)];
      size_[idx(p, root)] -= size_[idx(p, child)];
      parent_[idx(p, child)] = child;
    }
    --degree_[idx(p, e.u)];
    --degree_[idx(p, e.v)];
    common_[p] = u.common;
    assigned_[static_cast<std::size_t>(p * colors_ + c)] = kNoEdge;
  }

  std::span<const EdgeId> part_edges(int p) const {
    return {assigned_.data() + static_cast<std::size_t>(p * colors_), static_cast<std::size_t>(colors_)};
  }

  void leaf() {
    if (!pruning_) {
      for (int p = 0; p < parts_; ++p)
        if (!matches_shape(g_, part_edges(p), req_.shape)) return;
    }
    ++count_;
    if (certificates_.size() < limit_) {
      RainbowCollection coll;
      for (int p = 0; p < parts_; ++p) {
        const auto edges = part_edges(p);
        coll.parts.push_back({std::vector<EdgeId>(edges.begin(), edges.end()), req_.shape});
      }
      certificates_.push_back(canonicalize(std::move(coll)));
    }
    if (req_.mode == SearchMode::exists) stop_ = true;
  }

  void place(int c, int p) {
    if (c == colors_) {
      leaf();
      return;
    }
    if (p == parts_) {
      if (collecting_ && c == 1) {
        Branch b{std::vector<int>(static_cast<std::size_t>(parts_)), nodes_};
        for (int q = 0; q < parts_; ++q) {
          const EdgeId id = assigned_[static_cast<std::size_t>(q * colors_ + 1)];
          const auto cls = g_.color_class(1);
          b.picks[static_cast<std::size_t>(q)] = static_cast<int>(std::ranges::find(cls, id) - cls.begin());
        }
        branches_.push_back(std::move(b));
        return;
      }
      place(c + 1, 0);
      return;
    }
    const auto cls = g_.color_class(c);
    for (int k = 0; k < parts_ && !stop_; ++k) {
      auto& used = used_[static_cast<std::size_t>(c * parts_ + k)];
      if (used) continue;
      const EdgeId id = cls[static_cast<std::size_t>(k)];
      if (pruning_ && !fits(p, id)) continue;
      if (++nodes_ > budget_) {
        overflow_ = stop_ = true;
        return;
      }
      if (poll_ && (nodes_ & 0x3ff) == 0 && poll_(nodes_)) {
        cancelled_ = stop_ = true;
        return;
      }
      const Undo u = apply(p, c, id);
      used = 1;
      place(c, p + 1);
      used = 0;
      undo(p, c, id, u);
    }
  }

  const ColoredMultigraph& g_;
  const SearchRequest& req_;
  bool pruning_;
  std::uint64_t budget_;
  int n_;
  int parts_;
  int colors_;
  std::uint64_t limit_;

  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> degree_;
  std::vector<std::uint64_t> common_;
  std::vector<char> used_;
  std::vector<EdgeId> assigned_;

  bool collecting_ = false;
  std::vector<Branch> branches_;
  std::function<bool(std::uint64_t)> poll_;

  std::uint64_t count_ = 0;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
  bool overflow_ = false;
  bool cancelled_ = false;
  std::vector<RainbowCollection> certificates_;
};

SearchReport make_report(const SearchRequest& req) {
  SearchReport r;
  r.shape = req.shape;
  r.mode = req.mode;
  return r;
}

[[noreturn]] void throw_too_large(std::uint64_t budget) {
  throw InstanceTooLarge("search exceeded its budget of " + std::to_string(budget) + " nodes");
}

}  // namespace

std::string to_string(SearchMode m) {
  switch (m) {
    case SearchMode::exists: return "exists";
    case SearchMode::count: return "count";
    case SearchMode::enumerate: return "enumerate";
  }
  return "?";
}

SearchMode search_mode_from_string(const std::string& s) {
  if (s == "exists") return SearchMode::exists;
  if (s == "count") return SearchMode::count;
  if (s == "enumerate") return SearchMode::enumerate;
  throw std::invalid_argument("unknown search mode '" + s + "'");
}

SearchReport search_decompositions_serial(const ColoredMultigraph& g, const SearchRequest& req, const SearchOptions& opts) {
  check_search_instance(g);
  Engine engine(g, req, opts);
  engine.run();
  SearchReport r = make_report(req);
  r.count = engine.count();
  r.nodes = engine.nodes();
  r.certificates = std::move(engine.certificates());
  r.exhausted = !engine.overflowed();
  if (!r.exhausted && req.mode != SearchMode::enumerate) throw_too_large(opts.node_budget);
  return r;
}

SearchReport search_decompositions(const ColoredMultigraph& g, const SearchRequest& req, const SearchOptions& opts) {
  check_search_instance(g);
  if (opts.threads == 1 || g.vertex_count() < 3) return search_decompositions_serial(g, req, opts);

  Engine root(g, req, opts);
  const auto branches = root.split();
  if (root.overflowed()) return search_decompositions_serial(g, req, opts);

  struct Result {
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
    std::vector<RainbowCollection> certificates;
  };
  const auto nb = static_cast<std::int64_t>(branches.size());
  std::vector<Result> results(branches.size());
  const bool exists = req.mode == SearchMode::exists;
  std::atomic<std::uint64_t> work{root.nodes()};
  std::atomic<bool> over{false};
  std::atomic<std::int64_t> first_hit{nb};
  const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();

  // Cancellation only ever skips branches after the earliest hit, so every
  // branch before it runs to completion and the merge below reproduces the
  // sequential report exactly. Any budget overrun defers to the serial path.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t b = 0; b < nb; ++b) {
    if (over.load(std::memory_order_relaxed) || (exists && b > first_hit.load())) continue;
    Engine engine(g, req, opts);
    std::uint64_t flushed = 0;
    engine.set_cancel([&, b](std::uint64_t local) {
      const auto total = work.fetch_add(local - flushed) + (local - flushed);
      flushed = local;
      if (total > opts.node_budget) over = true;
      return over.load(std::memory_order_relaxed) || (exists && b > first_hit.load());
    });
    engine.run_branch(branches[static_cast<std::size_t>(b)]);
    if (engine.overflowed()) over = true;
    auto& res = results[static_cast<std::size_t>(b)];
    res.count = engine.count();
    res.nodes = engine.nodes();
    res.certificates = std::move(engine.certificates());
    if (exists && res.count > 0 && !engine.cancelled()) {
      auto cur = first_hit.load();
      while (b < cur && !first_hit.compare_exchange_weak(cur, b)) {
      }
    }
  }
  if (over) return search_decompositions_serial(g, req, opts);

  SearchReport r = make_report(req);
  const auto hit = first_hit.load();
  if (exists && hit < nb) {
    std::uint64_t nodes = branches[static_cast<std::size_t>(hit)].prefix_nodes;
    for (std::int64_t b = 0; b <= hit; ++b) nodes += results[static_cast<std::size_t>(b)].nodes;
    r.nodes = nodes;
    r.count = 1;
    r.certificates.push_back(results[static_cast<std::size_t>(hit)].certificates.front());
  } else {
    const std::uint64_t limit =
        req.mode == SearchMode::enumerate ? req.limit.value_or(std::numeric_limits<std::uint64_t>::max()) : 1;
    r.nodes = root.nodes();
    for (auto& res : results) {
      r.nodes += res.nodes;
      r.count += res.count;
      for (auto& cert : res.certificates)
        if (r.certificates.size() < limit) r.certificates.push_back(std::move(cert));
    }
  }
  if (r.nodes > opts.node_budget) return search_decompositions_serial(g, req, opts);
  r.exhausted = true;
  return r;
}

bool stars_to_stars_feasible(const StarConfiguration& cfg) {
  const auto profile = vertex_degree_profile(cfg);
  const int n = cfg.n();
  const bool all_small = std::ranges::all_of(profile, [](const DegreeEntry& d) { return d.stars_centered <= 1; });
  const bool one_full = std::ranges::any_of(profile, [n](const DegreeEntry& d) { return d.stars_centered == n - 1; });
  return all_small || one_full;
}

BigInt count_rainbow_star_decompositions_fast(const StarConfiguration& cfg) {
  if (cfg.centers_all_equal()) {
    if (cfg.n() > kMaxOmegaN) throw CountUnavailable(cfg.n());
    return count_omega(cfg.n());
  }
  if (cfg.centers_all_distinct()) return 1;
  return 0;
}

}  // namespace rainbow
