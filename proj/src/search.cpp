#include "starec/search.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <mutex>
#include <thread>

#include "starec/error.hpp"
#include "starec/verify.hpp"

namespace starec {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Colored: return "Colored";
    case SearchStatus::Unsat: return "Unsat";
    case SearchStatus::TimedOut: return "TimedOut";
  }
  return "Unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Plan {
  std::vector<EdgeId> order;
  /// chain_prev[e] = f means color(e) must exceed color(f); -1 if unconstrained.
  std::vector<EdgeId> chain_prev;
  bool color_classes = true;
};

// Greedy order: each next edge touches as many already-placed edges as possible.
void extend_order(const Graph& g, std::vector<EdgeId>& order) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  std::vector<char> placed(m, 0);
  std::vector<std::int32_t> touching(m, 0);
  auto place = [&](EdgeId e) {
    placed[static_cast<std::size_t>(e)] = 1;
    for (EdgeId f : g.adjacent_edges(e)) ++touching[static_cast<std::size_t>(f)];
  };
  for (EdgeId e : order) place(e);
  auto degree_sum = [&](EdgeId e) { return g.degree(g.edge(e).u) + g.degree(g.edge(e).v); };
  while (order.size() < m) {
    EdgeId best = -1;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (placed[static_cast<std::size_t>(e)]) continue;
      if (best == -1) {
        best = e;
        continue;
      }
      const auto te = touching[static_cast<std::size_t>(e)];
      const auto tb = touching[static_cast<std::size_t>(best)];
      if (te > tb || (te == tb && degree_sum(e) > degree_sum(best))) best = e;
    }
    order.push_back(best);
    place(best);
  }
}

// For K_{r,d}: row of the first X vertex, then the first Y column with
// strictly increasing colors (rows are interchangeable).
bool orbit_prefix(const Graph& g, const BipartitePartition& p, Plan& plan) {
  const auto nx = p.part_x.size();
  const auto ny = p.part_y.size();
  if (nx == 0 || ny == 0 || static_cast<std::size_t>(g.edge_count()) != nx * ny) return false;
  std::vector<EdgeId> cell(nx * ny, -1);
  std::vector<std::int32_t> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < nx; ++i) index[static_cast<std::size_t>(p.part_x[i])] = static_cast<std::int32_t>(i);
  for (std::size_t j = 0; j < ny; ++j) index[static_cast<std::size_t>(p.part_y[j])] = static_cast<std::int32_t>(j);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Vertex x = g.edge(e).u;
    Vertex y = g.edge(e).v;
    if (!p.in_x[static_cast<std::size_t>(x)]) std::swap(x, y);
    auto& slot = cell[static_cast<std::size_t>(index[static_cast<std::size_t>(x)]) * ny +
                      static_cast<std::size_t>(index[static_cast<std::size_t>(y)])];
    if (slot != -1) return false;
    slot = e;
  }
  for (std::size_t j = 0; j < ny; ++j) plan.order.push_back(cell[j]);
  for (std::size_t i = 1; i < nx; ++i) {
    plan.order.push_back(cell[i * ny]);
    if (i >= 2) plan.chain_prev[static_cast<std::size_t>(cell[i * ny])] = cell[(i - 1) * ny];
  }
  return true;
}

Plan make_plan(const Graph& g, const SearchConfig& cfg) {
  Plan plan;
  plan.chain_prev.assign(static_cast<std::size_t>(g.edge_count()), -1);
  plan.color_classes = cfg.symmetry != Symmetry::None;
  if (cfg.symmetry == Symmetry::BipartiteOrbits) {
    std::optional<BipartitePartition> p = cfg.partition;
    if (!p) p = infer_bipartition(g);
    if (p && !orbit_prefix(g, *p, plan)) {
      plan.order.clear();
      std::fill(plan.chain_prev.begin(), plan.chain_prev.end(), -1);
    }
  }
  if (plan.order.empty() && g.edge_count() > 0) {
    EdgeId first = 0;
    auto degree_sum = [&](EdgeId e) { return g.degree(g.edge(e).u) + g.degree(g.edge(e).v); };
    for (EdgeId e = 1; e < g.edge_count(); ++e) {
      if (degree_sum(e) > degree_sum(first)) first = e;
    }
    plan.order.push_back(first);
  }
  extend_order(g, plan.order);
  return plan;
}

struct Shared {
  Clock::time_point deadline;
  std::atomic<bool> stop{false};
};

class Engine {
 public:
  enum class Result { Found, Exhausted, Aborted };

  Engine(const Graph& g, Color t, const Plan& plan, Shared& shared)
      : g_(g), t_(t), plan_(plan), shared_(shared),
        color_(static_cast<std::size_t>(g.edge_count()), 0),
        at_(static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(t + 1), -1) {}

  // Replays an assignment of the first colors.size() positions of the order.
  void preload(const std::vector<Color>& colors) {
    for (std::size_t i = 0; i < colors.size(); ++i) assign(plan_.order[i], colors[i]);
  }

  Result run(std::size_t from, Color max_used) { return dfs(from, max_used); }

  /// Collects every consistent assignment of the first depth positions.
  Result enumerate_prefixes(std::size_t depth, std::vector<std::vector<Color>>& out) {
    split_depth_ = depth;
    prefixes_ = &out;
    const Result r = dfs(0, 0);
    prefixes_ = nullptr;
    return r;
  }

  EdgeColoring coloring() const { return EdgeColoring(color_); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::int32_t walk(Vertex from, Color first, Color second) const {
    Vertex x = from;
    Color want = first;
    std::int32_t count = 0;
    while (count < 3) {
      const EdgeId f = at_[slot(x, want)];
      if (f < 0) break;
      ++count;
      x = g_.edge(f).other(x);
      want = want == first ? second : first;
    }
    return count;
  }

  bool admissible(EdgeId e, Color a) const {
    const Edge& ed = g_.edge(e);
    if (at_[slot(ed.u, a)] >= 0 || at_[slot(ed.v, a)] >= 0) return false;
    for (Vertex side : {ed.u, ed.v}) {
      for (const Incidence& inc : g_.incident(side)) {
        const Color b = color_[static_cast<std::size_t>(inc.edge)];
        if (b == 0) continue;
        // Edges of the {a,b} component that would contain e.
        if (1 + walk(ed.u, b, a) + walk(ed.v, b, a) >= 4) return false;
      }
    }
    return true;
  }

  void assign(EdgeId e, Color a) {
    color_[static_cast<std::size_t>(e)] = a;
    at_[slot(g_.edge(e).u, a)] = e;
    at_[slot(g_.edge(e).v, a)] = e;
  }

  void unassign(EdgeId e) {
    const Color a = color_[static_cast<std::size_t>(e)];
    at_[slot(g_.edge(e).u, a)] = -1;
    at_[slot(g_.edge(e).v, a)] = -1;
    color_[static_cast<std::size_t>(e)] = 0;
  }

  Result dfs(std::size_t pos, Color max_used) {
    if ((++nodes_ & 1023U) == 0) {
      if (shared_.stop.load(std::memory_order_relaxed) || Clock::now() >= shared_.deadline) return Result::Aborted;
    }
    if (prefixes_ && pos == split_depth_) {
      std::vector<Color> prefix(pos);
      for (std::size_t i = 0; i < pos; ++i) prefix[i] = color_[static_cast<std::size_t>(plan_.order[i])];
      prefixes_->push_back(std::move(prefix));
      return Result::Exhausted;
    }
    if (pos == plan_.order.size()) return Result::Found;
    const EdgeId e = plan_.order[pos];
    const Color limit = plan_.color_classes ? std::min(t_, max_used + 1) : t_;
    Color low = 1;
    if (const EdgeId prev = plan_.chain_prev[static_cast<std::size_t>(e)]; prev >= 0) {
      low = color_[static_cast<std::size_t>(prev)] + 1;
    }
    for (Color a = low; a <= limit; ++a) {
      if (!admissible(e, a)) continue;
      assign(e, a);
      const Result r = dfs(pos + 1, std::max(max_used, a));
      if (r == Result::Found) return r;
      unassign(e);
      if (r == Result::Aborted) return r;
    }
    return Result::Exhausted;
  }

  std::size_t slot(Vertex v, Color c) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(t_ + 1) + static_cast<std::size_t>(c);
  }

  const Graph& g_;
  Color t_;
  const Plan& plan_;
  Shared& shared_;
  std::vector<Color> color_;
  std::vector<EdgeId> at_;
  std::uint64_t nodes_ = 0;
  std::size_t split_depth_ = 0;
  std::vector<std::vector<Color>>* prefixes_ = nullptr;
};

SearchOutcome finish(const Graph& g, Engine::Result r, const EdgeColoring& c, std::uint64_t nodes) {
  SearchOutcome out;
  out.nodes_explored = nodes;
  switch (r) {
    case Engine::Result::Found:
      if (check_star(g, c)) throw Error(ErrorCode::InternalCaseExhaustion, "search produced an invalid coloring");
      out.status = SearchStatus::Colored;
      out.coloring = c;
      break;
    case Engine::Result::Exhausted: out.status = SearchStatus::Unsat; break;
    case Engine::Result::Aborted: out.status = SearchStatus::TimedOut; break;
  }
  return out;
}

SearchOutcome search_sequential(const Graph& g, Color t, const Plan& plan, Shared& shared) {
  Engine engine(g, t, plan, shared);
  const auto r = engine.run(0, 0);
  return finish(g, r, engine.coloring(), engine.nodes());
}

SearchOutcome search_parallel(const Graph& g, Color t, const Plan& plan, Shared& shared) {
  const unsigned workers = std::max(2U, std::thread::hardware_concurrency());
  std::vector<std::vector<Color>> prefixes;
  std::uint64_t nodes = 0;
  // Deepen the split until there is enough work to share.
  std::size_t depth = 1;
  for (; depth < plan.order.size(); ++depth) {
    prefixes.clear();
    Engine probe(g, t, plan, shared);
    const auto r = probe.enumerate_prefixes(depth, prefixes);
    nodes += probe.nodes();
    if (r == Engine::Result::Aborted) return finish(g, r, EdgeColoring(), nodes);
    if (prefixes.size() >= 4 * workers) break;
  }
  if (depth >= plan.order.size()) return search_sequential(g, t, plan, shared);

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total{nodes};
  std::atomic<bool> aborted{false};
  std::optional<EdgeColoring> found;
  std::mutex found_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size() || shared.stop.load()) return;
      Engine engine(g, t, plan, shared);
      engine.preload(prefixes[i]);
      Color max_used = 0;
      for (Color c : prefixes[i]) max_used = std::max(max_used, c);
      const auto r = engine.run(prefixes[i].size(), max_used);
      total += engine.nodes();
      if (r == Engine::Result::Found) {
        std::lock_guard lock(found_mutex);
        if (!found) found = engine.coloring();
        shared.stop = true;
        return;
      }
      if (r == Engine::Result::Aborted) {
        aborted = true;
        return;
      }
    }
  };
  std::vector<std::future<void>> tasks;
  for (unsigned w = 0; w < workers; ++w) tasks.push_back(std::async(std::launch::async, worker));
  for (auto& f : tasks) f.get();
  if (found) return finish(g, Engine::Result::Found, *found, total);
  return finish(g, aborted ? Engine::Result::Aborted : Engine::Result::Exhausted, EdgeColoring(), total);
}

SearchOutcome search_with(const Graph& g, Color t, const SearchConfig& cfg, const Plan& plan,
                          Clock::time_point deadline) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "color count must be positive");
  if (g.edge_count() == 0) return {SearchStatus::Colored, EdgeColoring(0), 0};
  if (t < g.max_degree()) return {SearchStatus::Unsat, std::nullopt, 0};
  Shared shared;
  shared.deadline = deadline;
  return cfg.parallel ? search_parallel(g, t, plan, shared) : search_sequential(g, t, plan, shared);
}

void validate(const SearchConfig& cfg) {
  if (cfg.time_budget.count() <= 0) throw Error(ErrorCode::InvalidArgument, "time budget must be positive");
  if (cfg.max_colors < 0) throw Error(ErrorCode::InvalidArgument, "max colors must be nonnegative");
}

}  // namespace

SearchOutcome find_star_coloring(const Graph& g, Color t, const SearchConfig& cfg) {
  validate(cfg);
  const Plan plan = make_plan(g, cfg);
  return search_with(g, t, cfg, plan, Clock::now() + cfg.time_budget);
}

ChiResult chi_star(const Graph& g, const SearchConfig& cfg) {
  validate(cfg);
  ChiResult result;
  if (g.edge_count() == 0) {
    result.status = SearchStatus::Colored;
    result.witness = EdgeColoring(0);
    return result;
  }
  const auto deadline = Clock::now() + cfg.time_budget;
  const Plan plan = make_plan(g, cfg);
  const Color cap = cfg.max_colors > 0 ? cfg.max_colors : g.edge_count();
  for (Color t = g.max_degree(); t <= cap; ++t) {
    const SearchOutcome o = search_with(g, t, cfg, plan, deadline);
    result.nodes_explored += o.nodes_explored;
    if (o.status == SearchStatus::Colored) {
      result.status = SearchStatus::Colored;
      result.value = t;
      result.witness = *o.coloring;
      return result;
    }
    if (o.status == SearchStatus::TimedOut) {
      result.status = SearchStatus::TimedOut;
      return result;
    }
    result.unsat_certified.push_back(t);
  }
  result.status = SearchStatus::Unsat;
  return result;
}

}  // namespace starec
