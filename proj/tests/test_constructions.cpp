#include "arcgeom/constructions.hpp"

#include "doctest.h"

using namespace arcgeom;

namespace {
std::shared_ptr<const Geometry> pg(int p, int e, int k) { return Geometry::build(Field::make(p, e), k); }
}  // namespace

TEST_CASE("conic sizes and validity") {
  auto c5 = conic(pg(5, 1, 3));
  CHECK(c5.n() == 6);
  CHECK(verify_arc(c5, 2).pass);

  auto c8 = conic(pg(2, 3, 3));
  CHECK(c8.n() == 9);

  auto c2 = conic(pg(2, 1, 3));  // smallest case: 3 points, still n > r
  CHECK(c2.n() == 3);
  CHECK(verify_arc(c2, 2).pass);

  CHECK_THROWS_AS(conic(pg(2, 1, 4)), InputError);
}

TEST_CASE("degree-4 maximal arcs") {
  auto g8 = pg(2, 3, 3);
  auto d8 = denniston(g8, 4);
  CHECK(d8.arc.n() == 28);
  CHECK(d8.retries == 0);
  CHECK(d8.b == 1);  // x^2 + x + 1 has no root in GF(8)
  CHECK(d8.subgroup == std::vector<felt>{0, 1, 2, 3});
  CHECK(verify_arc(d8.arc, 4).pass);
  CHECK(is_complete(d8.arc));
  CHECK(maximality_status(profile(d8.arc), *g8).status == Bound::Maximal);

  auto g16 = pg(2, 4, 3);
  auto d16 = denniston(g16, 4);
  CHECK(d16.arc.n() == 52);  // (4-1)*17 + 1
  CHECK(d16.b == 2);         // x^2 + x + 1 factors over GF(16); next code works
  auto prof16 = profile(d16.arc);
  for (auto& [count, lines] : prof16.histogram) CHECK((count == 0 || count == 4));
  CHECK(maximality_status(prof16, *g16).status == Bound::Maximal);

  auto d16_8 = denniston(g16, 8);
  CHECK(d16_8.arc.n() == 7 * 17 + 1);
  CHECK(is_complete(d16_8.arc));
}

TEST_CASE("maximal-arc construction guards") {
  auto g8 = pg(2, 3, 3);
  CHECK_THROWS_AS(denniston(g8, 3), InputError);   // 3 does not divide 8
  CHECK_THROWS_AS(denniston(g8, 8), InputError);   // degree must be proper
  CHECK_THROWS_AS(denniston(g8, 1), InputError);
  CHECK_THROWS_AS(denniston(pg(5, 1, 3), 4), InputError);  // odd characteristic
  CHECK_THROWS_AS(denniston(pg(2, 3, 4), 4), InputError);  // not a plane
}

TEST_CASE("point deletion") {
  auto g = pg(2, 3, 3);
  auto dn = denniston(g, 4).arc;
  auto d1 = delete_points(dn, {dn.support()[3]});
  CHECK(d1.n() == 27);
  auto d2 = delete_points(dn, {dn.support()[3], dn.support()[10]});
  CHECK(d2.n() == 26);
  CHECK_THROWS_AS(delete_points(dn, {dn.support()[3], dn.support()[3]}), InputError);
}

TEST_CASE("random arcs are valid, deterministic, and seed-sensitive") {
  auto g = pg(5, 1, 3);
  auto a = random_arc(g, 2, 6, 42);
  auto prof = profile(a);
  CHECK(prof.r <= 2);
  CHECK(verify_arc(a, prof.r).pass);
  CHECK(a == random_arc(g, 2, 6, 42));

  auto g32 = pg(2, 1, 4);
  auto b = random_arc(g32, 3, 8, 7);
  CHECK(profile(b).r <= 3);

  bool differs = false;
  for (std::uint64_t s = 0; s < 8 && !differs; ++s)
    differs = !(random_arc(g, 2, 6, s) == a);
  CHECK(differs);
}
