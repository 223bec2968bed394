#include "arcgeom/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "arcgeom/errors.hpp"

namespace arcgeom {
namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  std::uint64_t max_nodes;
  Clock::time_point deadline;
  bool has_deadline;

  bool hit(std::uint64_t nodes) const {
    if (max_nodes && nodes >= max_nodes) return true;
    if (has_deadline && Clock::now() >= deadline) return true;
    return false;
  }
};

/// One depth-first exploration unit.  Owns its whole state so subtree
/// explorations are independent of each other.
struct Dfs {
  const Geometry& g;
  int r;
  const Budget& budget;

  std::vector<std::uint32_t> counts;
  Bitset saturated;
  std::vector<Bitset> sat_stack;  // per-depth snapshots for backtracking
  std::vector<PointIdx> chosen;

  std::uint64_t nodes = 0;
  bool budget_hit = false;

  // incumbent
  std::uint64_t best = 0;
  std::vector<PointIdx> witness;

  // find mode
  std::uint64_t target = 0;  // 0 = prove (maximize)
  bool found = false;

  Dfs(const Geometry& geom, int rr, const Budget& b)
      : g(geom), r(rr), budget(b), counts(geom.num_hyperplanes(), 0), saturated(geom.num_points()) {}

  void choose(PointIdx p, std::size_t depth) {
    if (sat_stack.size() <= depth) sat_stack.resize(depth + 1);
    sat_stack[depth] = saturated;
    chosen.push_back(p);
    g.pencil_row(p).for_each_set([&](std::size_t h) {
      if (++counts[h] == static_cast<std::uint32_t>(r)) saturated |= g.hyperplane_row(static_cast<PointIdx>(h));
    });
  }

  void unchoose(PointIdx p, std::size_t depth) {
    chosen.pop_back();
    g.pencil_row(p).for_each_set([&](std::size_t h) { --counts[h]; });
    saturated = sat_stack[depth];
  }

  void record() {
    if (chosen.size() > best) {
      best = chosen.size();
      witness = chosen;
      if (target && best >= target) found = true;
    }
  }

  void explore(std::int64_t last) {
    if (budget_hit || found) return;
    if (budget.hit(nodes)) {
      budget_hit = true;
      return;
    }
    ++nodes;

    std::vector<PointIdx> cands;
    for (PointIdx p = static_cast<PointIdx>(last + 1); p < g.num_points(); ++p)
      if (!saturated.test(p)) cands.push_back(p);

    const std::size_t depth = chosen.size();
    for (std::size_t i = 0; i < cands.size(); ++i) {
      // Optimistic completion: everything admissible after this candidate.
      std::uint64_t optimistic = depth + (cands.size() - i);
      if (target ? optimistic < target : optimistic <= best) break;
      choose(cands[i], depth);
      record();
      explore(cands[i]);
      unchoose(cands[i], depth);
      if (budget_hit || found) return;
    }
  }
};

ArcMultiset to_arc(std::shared_ptr<const Geometry> g, const std::vector<PointIdx>& pts) {
  return ArcMultiset::from_points(std::move(g), pts);
}

// Canonical greedy warm start: walk indices ascending, insert when no
// hyperplane through the point is full.
std::vector<PointIdx> greedy_arc(const Geometry& g, int r) {
  std::vector<std::uint32_t> counts(g.num_hyperplanes(), 0);
  std::vector<PointIdx> out;
  for (PointIdx p = 0; p < g.num_points(); ++p) {
    bool fits = true;
    g.pencil_row(p).for_each_set([&](std::size_t h) {
      if (counts[h] >= static_cast<std::uint32_t>(r)) fits = false;
    });
    if (!fits) continue;
    out.push_back(p);
    g.pencil_row(p).for_each_set([&](std::size_t h) { ++counts[h]; });
  }
  return out;
}

}  // namespace

SearchResult search_max_arc(std::shared_ptr<const Geometry> g, int r, const SearchOptions& opts) {
  if (r < g->k() - 1) throw InputError("r below the dimension floor k-1");
  const auto t0 = Clock::now();

  Budget budget{opts.max_nodes, {}, false};
  if (opts.budget_seconds > 0) {
    budget.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(opts.budget_seconds));
    budget.has_deadline = true;
  }

  SearchResult res;
  res.pruning_rules = {
      "candidate excluded when a hyperplane through it already holds r arc points",
      "branch cut when current size plus remaining admissible candidates cannot beat the incumbent",
  };

  if (opts.mode == SearchMode::Find) {
    if (opts.target == 0) throw InputError("find mode needs a target size");
    res.target = opts.target;
    if (opts.workers > 1)
      res.notes.push_back("find mode runs sequentially; the workers flag only affects prove-max");

    Dfs dfs(*g, r, budget);
    dfs.target = opts.target;
    // Seed the incumbent with the greedy arc so a trivially reachable
    // target returns immediately.
    auto warm = greedy_arc(*g, r);
    dfs.best = warm.size();
    dfs.witness = warm;
    if (dfs.best >= opts.target) dfs.found = true;
    if (!dfs.found) dfs.explore(-1);

    res.nodes = dfs.nodes;
    res.budget_exhausted = dfs.budget_hit;
    res.best_n = dfs.best;
    res.target_reached = dfs.found;
    if (!dfs.witness.empty()) {
      if (dfs.found) dfs.witness.resize(opts.target);  // greedy seed may overshoot
      res.best_arc = to_arc(g, dfs.witness);
      res.best_n = dfs.witness.size();
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
  }

  // prove_max
  if (g->num_points() > (1u << 14))
    throw GuardExceeded("prove-max guard: geometry has more than 2^14 points");
  res.notes.push_back(
      "first point fixed to index 0: the collineation group is transitive on points, so some "
      "maximum-size arc contains the first canonical point");

  auto warm = greedy_arc(*g, r);
  const std::uint64_t warm_n = warm.size();

  // Subtree roots: prefixes (0, x) over admissible second points.
  Dfs root(*g, r, budget);
  root.choose(0, 0);
  std::vector<PointIdx> seconds_list;
  for (PointIdx p = 1; p < g->num_points(); ++p)
    if (!root.saturated.test(p)) seconds_list.push_back(p);

  struct SubtreeResult {
    std::uint64_t best = 0;
    std::vector<PointIdx> witness;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
  };
  std::vector<SubtreeResult> sub(seconds_list.size());

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= seconds_list.size()) return;
      Dfs dfs(*g, r, budget);
      dfs.best = warm_n;  // local incumbent only: exploration is
                          // independent of other subtrees and of scheduling
      dfs.choose(0, 0);
      dfs.choose(seconds_list[i], 1);
      dfs.record();
      dfs.explore(seconds_list[i]);
      sub[i].best = dfs.best;
      sub[i].witness = std::move(dfs.witness);
      sub[i].nodes = dfs.nodes;
      sub[i].budget_hit = dfs.budget_hit;
    }
  };

  const int nw = std::max(1, opts.workers);
  if (nw == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < nw; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  res.best_n = warm_n;
  std::vector<PointIdx> best_witness = warm;
  res.nodes = 1;  // the root
  for (const auto& s : sub) {
    res.nodes += s.nodes;
    res.budget_exhausted |= s.budget_hit;
    if (s.best > res.best_n) {
      res.best_n = s.best;
      best_witness = s.witness;
    }
  }
  res.proved_max = !res.budget_exhausted;
  if (!best_witness.empty()) res.best_arc = to_arc(g, best_witness);
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return res;
}

}  // namespace arcgeom
