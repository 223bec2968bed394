#include "arcgeom/arc.hpp"

#include <numeric>

#include "arcgeom/constructions.hpp"
#include "doctest.h"

using namespace arcgeom;

namespace {
std::shared_ptr<const Geometry> pg(int p, int e, int k) { return Geometry::build(Field::make(p, e), k); }
}  // namespace

TEST_CASE("multiset basics") {
  auto g = pg(2, 1, 3);
  auto arc = ArcMultiset::from_points(g, {0, 1, 2});
  CHECK(arc.n() == 3);
  CHECK(arc.is_set());
  CHECK_THROWS_AS(ArcMultiset::from_points(g, {0, 0}), InputError);
  arc.add_point(0);
  CHECK(arc.n() == 4);
  CHECK(!arc.is_set());
  arc.remove_point(0);
  arc.remove_point(0);
  CHECK(arc.multiplicity(0) == 0);
  CHECK_THROWS_AS(arc.remove_point(0), InputError);
}

TEST_CASE("profile of a conic in PG(2,8)") {
  auto g = pg(2, 3, 3);
  auto arc = conic(g);
  auto prof = profile(arc);
  CHECK(prof.n == 9);
  CHECK(prof.r == 2);
  CHECK(prof.s == 0);
  // Tangents exist at every arc point.
  for (PointIdx p : arc.support()) {
    bool tangent_through = false;
    for (PointIdx h : prof.tangents)
      if (g->incident(p, h)) tangent_through = true;
    CHECK(tangent_through);
  }
  // Histogram mass identity.
  std::uint64_t mass = 0;
  for (auto c : prof.counts) mass += c;
  CHECK(mass == prof.n * g->hyperplane_size());
  CHECK(prof.secants.size() + prof.tangents.size() + prof.externals.size() == g->num_hyperplanes());
}

TEST_CASE("profile of the degree-4 maximal arc in PG(2,8)") {
  auto g = pg(2, 3, 3);
  auto arc = denniston(g, 4).arc;
  auto prof = profile(arc);
  CHECK(prof.n == 28);
  CHECK(prof.r == 4);
  CHECK(prof.s == 2);
  CHECK(prof.tangents.empty());  // every line meets in 0 or 4 points
  CHECK(prof.histogram == std::map<int, std::uint32_t>{{0, 10}, {4, 63}});
}

TEST_CASE("profile of a single point in PG(2,2)") {
  auto g = pg(2, 1, 3);
  auto arc = ArcMultiset::from_points(g, {0});
  auto prof = profile(arc);
  CHECK(prof.n == 1);
  CHECK(prof.r == 1);
  CHECK(prof.histogram == std::map<int, std::uint32_t>{{0, 4}, {1, 3}});
}

TEST_CASE("profile is worker-count independent") {
  auto g = pg(2, 3, 3);
  auto arc = denniston(g, 4).arc;
  auto p1 = profile(arc, 1);
  auto p4 = profile(arc, 4);
  CHECK(p1.counts == p4.counts);
  CHECK(p1.secants == p4.secants);
}

TEST_CASE("verify_arc") {
  auto g = pg(2, 3, 3);
  auto arc = conic(g);
  CHECK(verify_arc(arc, 2).pass);
  auto fail = verify_arc(arc, 3);
  CHECK(!fail.pass);
  CHECK(fail.observed_r == 2);
  CHECK_THROWS_AS(verify_arc(arc, 1), InputError);  // r below k-1

  // A multiset exceeding the claimed r names a witness hyperplane.
  auto big = ArcMultiset::from_points(g, g->flat_points(g->span_of({0, 1})));
  auto diag = verify_arc(big, 3);
  CHECK(!diag.pass);
  CHECK(diag.witness_hyperplane.has_value());
}

TEST_CASE("maximality status") {
  auto g = pg(2, 3, 3);
  auto dn = denniston(g, 4).arc;
  CHECK(maximality_status(profile(dn), *g).status == Bound::Maximal);

  auto smaller = dn.without_point(dn.support()[0]);
  auto st = maximality_status(profile(smaller), *g);
  CHECK(st.status == Bound::BelowBound);
  CHECK(st.gap == 1);

  auto g5 = pg(5, 1, 3);
  auto c5 = conic(g5);
  auto st5 = maximality_status(profile(c5), *g5);
  CHECK(st5.status == Bound::BelowBound);
  CHECK(st5.bound == 7);
  CHECK(st5.gap == 1);
}

TEST_CASE("flat cap check") {
  auto g = pg(2, 3, 3);
  auto dn = denniston(g, 4).arc;
  auto report = flat_cap_check(dn);
  CHECK(report.applicable);  // 28 > 2*9+2
  CHECK(report.violations.empty());

  // Hypothesis not met (n <= s(q+1)+2): reported as not applicable.
  auto on_line = g->flat_points(g->span_of({0, 1}));
  auto small = ArcMultiset::from_points(g, {on_line[0], on_line[1], on_line[2], 9});
  auto prof_small = profile(small);
  REQUIRE(prof_small.s == 1);  // r = 3
  auto rep2 = flat_cap_check(small);
  CHECK(!rep2.applicable);
  CHECK(rep2.pass());

  // A doubled point on an otherwise large enough multiset is flagged.
  auto doubled = dn.without_point(dn.support()[5]);
  doubled.add_point(doubled.support()[0]);
  auto prof = profile(doubled);
  if (doubled.n() > static_cast<std::uint64_t>(prof.s) * 10 + 2) {
    auto rep3 = flat_cap_check(doubled);
    CHECK(rep3.applicable);
    CHECK(!rep3.violations.empty());
  }
}

TEST_CASE("doubled-point multisets never pass both checks") {
  // In PG(2,8): a 21-point multiset with a doubled point either exceeds
  // r = 4 on some line or gets flagged by the cap check.
  auto g = pg(2, 3, 3);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto base = random_arc(g, 4, 20, seed);
    auto ms = base;
    ms.add_point(ms.support()[seed % ms.support().size()]);
    if (ms.n() < 21) continue;
    auto diag = verify_arc(ms, 4);
    auto cap = flat_cap_check(ms);
    bool both_pass = diag.pass && cap.pass();
    CHECK(!both_pass);
  }
}

TEST_CASE("completeness") {
  // Conic plus nucleus in PG(2,4) is a hyperoval: complete.
  auto g4 = pg(2, 2, 3);
  auto c4 = conic(g4);
  CHECK(!is_complete(c4));
  auto cands = points_off_secants(c4, profile(c4));
  REQUIRE(cands.size() == 1);
  auto hyperoval = c4.with_point(cands[0]);
  CHECK(is_complete(hyperoval));
  CHECK(verify_arc(hyperoval, 2).pass);

  // Conic in PG(2,8) extends (q even), the maximal arc does not.
  auto g8 = pg(2, 3, 3);
  CHECK(!is_complete(conic(g8)));
  CHECK(is_complete(denniston(g8, 4).arc));
}

TEST_CASE("histogram mass identity on random multisets") {
  auto g = pg(3, 1, 4);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto arc = random_arc(g, 4, 9 + seed % 5, seed * 77 + 1);
    auto ms = arc;
    ms.add_point(arc.support()[0], static_cast<std::uint32_t>(seed % 3));
    auto prof = profile(ms);
    std::uint64_t mass = std::accumulate(prof.counts.begin(), prof.counts.end(), std::uint64_t{0});
    REQUIRE(mass == ms.n() * g->hyperplane_size());
  }
}

TEST_CASE("verified arcs above the cap threshold have clean cap reports") {
  // Lemma-style falsifiable property over random set arcs, k = 3 and 4.
  for (auto [p, e, k, r] : {std::tuple<int, int, int, int>{2, 2, 3, 3}, {5, 1, 3, 3}, {2, 1, 4, 4}, {3, 1, 4, 4}}) {
    auto g = pg(p, e, k);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      auto arc = random_arc(g, r, g->num_points(), seed);
      auto prof = profile(arc);
      auto diag = verify_arc(arc, prof.r);
      if (!diag.pass) continue;
      auto cap = flat_cap_check(arc);
      REQUIRE(cap.pass());
      REQUIRE(maximality_status(prof, *g).status != Bound::AboveBound);
    }
  }
}
