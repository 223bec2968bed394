#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "arcgeom/arc.hpp"

namespace arcgeom {

/// The q+1 points {(1, t, t^2)} plus (0,0,1) in PG(2,q).  Re-verified as an
/// (q+1, 2)-arc before returning.
ArcMultiset conic(std::shared_ptr<const Geometry> pg2q);

struct DennistonArc {
  ArcMultiset arc;
  felt b = 0;                    // x^2 + b x + 1 irreducible over GF(q)
  std::vector<felt> subgroup;    // additive subgroup H of order `degree`
  int retries = 0;               // b candidates rejected by post-verification
};

/// Maximal arc of the given degree in PG(2, 2^h): the points (x, y, 1) whose
/// value under x^2 + bxy + y^2 falls in an additive subgroup H of order
/// `degree`.  b is the smallest-coded element making x^2 + bx + 1
/// irreducible and H is spanned by the first log2(degree) polynomial-basis
/// elements; if post-verification rejects a choice the next b is tried.
/// The result is re-verified: (degree-1)(q+1)+1 points, every line meeting
/// the arc in 0 or `degree` points.
DennistonArc denniston(std::shared_ptr<const Geometry> pg2q, std::uint32_t degree);

/// Decrements the multiplicity of each listed point index once.
ArcMultiset delete_points(const ArcMultiset& arc, const std::vector<PointIdx>& points);

/// Greedy randomized arc: points are visited in an order shuffled by `seed`
/// and inserted while no hyperplane exceeds r.  Deterministic given the
/// seed; may stop below target_n.
ArcMultiset random_arc(std::shared_ptr<const Geometry> g, int r, std::uint64_t target_n,
                       std::uint64_t seed);

}  // namespace arcgeom
