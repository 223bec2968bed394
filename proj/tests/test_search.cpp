#include "arcgeom/search.hpp"

#include "arcgeom/constructions.hpp"
#include "doctest.h"

using namespace arcgeom;

namespace {

std::shared_ptr<const Geometry> pg(int p, int e, int k) { return Geometry::build(Field::make(p, e), k); }

// Pruning-free reference search: plain depth-first enumeration of all sets
// with every hyperplane at or below r.  Validates the pruned search on
// small planes.
std::uint64_t max_arc_noprune(const Geometry& g, int r) {
  std::vector<std::uint32_t> counts(g.num_hyperplanes(), 0);
  std::uint64_t best = 0;
  std::vector<PointIdx> chosen;
  auto rec = [&](auto&& self, std::int64_t last) -> void {
    best = std::max<std::uint64_t>(best, chosen.size());
    for (PointIdx p = static_cast<PointIdx>(last + 1); p < g.num_points(); ++p) {
      bool fits = true;
      g.pencil_row(p).for_each_set([&](std::size_t h) {
        if (counts[h] >= static_cast<std::uint32_t>(r)) fits = false;
      });
      if (!fits) continue;
      g.pencil_row(p).for_each_set([&](std::size_t h) { ++counts[h]; });
      chosen.push_back(p);
      self(self, p);
      chosen.pop_back();
      g.pencil_row(p).for_each_set([&](std::size_t h) { --counts[h]; });
    }
  };
  rec(rec, -1);
  return best;
}

}  // namespace

TEST_CASE("prove-max matches the pruning-free reference on small planes") {
  for (auto [p, e, r] : {std::tuple<int, int, int>{2, 1, 2}, {3, 1, 2}, {2, 2, 2}, {2, 1, 3}}) {
    auto g = pg(p, e, 3);
    auto res = search_max_arc(g, r, {SearchMode::ProveMax, 0, 1, 0, 0});
    REQUIRE(res.proved_max);
    REQUIRE(res.best_n == max_arc_noprune(*g, r));
    REQUIRE(res.best_arc.has_value());
    auto diag = verify_arc(*res.best_arc, r);
    CHECK(diag.pass);
  }
}

TEST_CASE("known maximum arc sizes in small planes") {
  // Ovals for odd q, hyperovals for even q.
  CHECK(search_max_arc(pg(3, 1, 3), 2, {SearchMode::ProveMax, 0, 1, 0, 0}).best_n == 4);
  CHECK(search_max_arc(pg(2, 2, 3), 2, {SearchMode::ProveMax, 0, 1, 0, 0}).best_n == 6);
  // Largest (n,3)-arc of PG(2,4) meets the planar bound 2*5-1 = 9.
  CHECK(search_max_arc(pg(2, 2, 3), 3, {SearchMode::ProveMax, 0, 1, 0, 0}).best_n == 9);
}

TEST_CASE("prove-max output is identical across worker counts") {
  auto g = pg(2, 2, 3);
  auto r1 = search_max_arc(g, 2, {SearchMode::ProveMax, 0, 1, 0, 0});
  auto r3 = search_max_arc(g, 2, {SearchMode::ProveMax, 0, 3, 0, 0});
  auto r8 = search_max_arc(g, 2, {SearchMode::ProveMax, 0, 8, 0, 0});
  CHECK(r1.best_n == r3.best_n);
  CHECK(r1.best_n == r8.best_n);
  CHECK(r1.nodes == r3.nodes);
  CHECK(r1.nodes == r8.nodes);
  CHECK(r1.proved_max);
  CHECK(r3.proved_max);
  REQUIRE(r1.best_arc.has_value());
  REQUIRE(r3.best_arc.has_value());
  CHECK(*r1.best_arc == *r3.best_arc);
  CHECK(*r1.best_arc == *r8.best_arc);
}

TEST_CASE("find mode reaches requested sizes and respects budgets") {
  auto g = pg(5, 1, 3);
  SearchOptions find6{SearchMode::Find, 6, 1, 0, 0};
  auto res = search_max_arc(g, 2, find6);
  CHECK(res.target_reached);
  CHECK(res.best_n == 6);
  CHECK(verify_arc(*res.best_arc, 2).pass);

  // Monotone in the target: a smaller target is also reached.
  SearchOptions find4{SearchMode::Find, 4, 1, 0, 0};
  CHECK(search_max_arc(g, 2, find4).target_reached);

  // An unreachable target is refuted outright once the tree is exhausted.
  SearchOptions hopeless{SearchMode::Find, 30, 1, 0, 0};
  auto res2 = search_max_arc(g, 2, hopeless);
  CHECK(!res2.target_reached);
  CHECK(!res2.budget_exhausted);
  CHECK(!res2.proved_max);

  // A big search under a tiny node budget reports the exhausted budget.
  auto g8 = pg(2, 3, 3);
  SearchOptions strapped{SearchMode::Find, 29, 1, 10, 0};
  auto res3 = search_max_arc(g8, 4, strapped);
  CHECK(!res3.target_reached);
  CHECK(res3.budget_exhausted);
}

TEST_CASE("find mode reaches the degree-4 maximal size in PG(2,8)") {
  auto g = pg(2, 3, 3);
  SearchOptions f28{SearchMode::Find, 28, 1, 30'000'000, 0};
  auto res = search_max_arc(g, 4, f28);
  REQUIRE(res.target_reached);
  REQUIRE(res.best_arc.has_value());
  CHECK(res.best_arc->n() == 28);
  CHECK(verify_arc(*res.best_arc, 4).pass);
}

TEST_CASE("search guards") {
  CHECK_THROWS_AS(search_max_arc(pg(2, 1, 3), 1, {SearchMode::ProveMax, 0, 1, 0, 0}), InputError);
  CHECK_THROWS_AS(search_max_arc(pg(2, 1, 3), 2, {SearchMode::Find, 0, 1, 0, 0}), InputError);
}

TEST_CASE("prove-max certificate carries the pruning rules") {
  auto res = search_max_arc(pg(2, 1, 3), 2, {SearchMode::ProveMax, 0, 1, 0, 0});
  CHECK(res.pruning_rules.size() == 2);
  CHECK(!res.notes.empty());
  CHECK(res.nodes > 0);
}
