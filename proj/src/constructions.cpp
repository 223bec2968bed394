#include "arcgeom/constructions.hpp"

#include <algorithm>
#include <bit>

#include "arcgeom/errors.hpp"

namespace arcgeom {
namespace {

// splitmix64: tiny, stable across platforms, good enough for shuffling.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Unbiased bounded draw by rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound | 1);
    while (true) {
      std::uint64_t v = next() & mask;
      if (v < bound) return v;
    }
  }
};

}  // namespace

ArcMultiset conic(std::shared_ptr<const Geometry> pg2q) {
  if (pg2q->k() != 3) throw InputError("conic lives in a plane (k = 3)");
  const Field& f = pg2q->field();
  std::vector<PointIdx> pts;
  for (std::uint32_t t = 0; t < f.q(); ++t) {
    felt ft = static_cast<felt>(t);
    pts.push_back(*pg2q->index_of({1, ft, f.mul(ft, ft)}));
  }
  pts.push_back(*pg2q->index_of({0, 0, 1}));
  ArcMultiset arc = ArcMultiset::from_points(std::move(pg2q), pts);
  auto diag = verify_arc(arc, 2);
  if (!diag.pass) throw VerificationError("conic failed re-verification: " + diag.reason);
  return arc;
}

DennistonArc denniston(std::shared_ptr<const Geometry> pg2q, std::uint32_t degree) {
  const Field& f = pg2q->field();
  if (pg2q->k() != 3) throw InputError("maximal-arc construction lives in a plane (k = 3)");
  if (f.p() != 2) throw InputError("construction requires characteristic 2");
  if (degree < 2 || (degree & (degree - 1)) != 0)
    throw InputError("degree must be a power of 2, at least 2");
  if (degree >= f.q() || f.q() % degree != 0)
    throw InputError("degree must properly divide q");

  std::uint32_t e = 0;
  while ((1u << (e + 1)) <= degree) ++e;  // degree = 2^e

  // H = additive span of the first e polynomial-basis elements; with the
  // digit encoding that is exactly the codes 0..degree-1.
  std::vector<felt> subgroup(degree);
  for (std::uint32_t i = 0; i < degree; ++i) subgroup[i] = static_cast<felt>(i);

  const std::uint64_t expected = std::uint64_t{degree - 1} * (f.q() + 1) + 1;

  int retries = 0;
  for (std::uint32_t b = 0; b < f.q(); ++b) {
    felt fb = static_cast<felt>(b);
    // x^2 + bx + 1 must have no root in GF(q).
    bool irreducible = true;
    for (std::uint32_t t = 0; t < f.q() && irreducible; ++t) {
      felt ft = static_cast<felt>(t);
      felt val = f.add(f.add(f.mul(ft, ft), f.mul(fb, ft)), 1);
      if (val == 0) irreducible = false;
    }
    if (!irreducible) continue;

    std::vector<PointIdx> pts;
    for (std::uint32_t x = 0; x < f.q(); ++x)
      for (std::uint32_t y = 0; y < f.q(); ++y) {
        felt fx = static_cast<felt>(x), fy = static_cast<felt>(y);
        felt val = f.add(f.add(f.mul(fx, fx), f.mul(fb, f.mul(fx, fy))), f.mul(fy, fy));
        if (val < degree) pts.push_back(*pg2q->index_of({fx, fy, 1}));
      }
    std::sort(pts.begin(), pts.end());

    // Post-verification, never trusted from the formula: exact size and a
    // 0-or-degree line census.
    bool ok = pts.size() == expected;
    ArcMultiset candidate = ArcMultiset::from_points(pg2q, pts);
    if (ok) {
      ArcProfile prof = profile(candidate);
      for (auto& [count, hyperplanes] : prof.histogram)
        if (count != 0 && count != static_cast<int>(degree)) ok = false;
      if (prof.r != static_cast<int>(degree)) ok = false;
    }
    if (!ok) {
      // A failing (b, H) pair indicates the choice, not the caller; try the
      // next b in code order.
      ++retries;
      continue;
    }
    return DennistonArc{std::move(candidate), fb, std::move(subgroup), retries};
  }
  throw VerificationError("no b produced a verified maximal arc; construction is broken");
}

ArcMultiset delete_points(const ArcMultiset& arc, const std::vector<PointIdx>& points) {
  ArcMultiset out = arc;
  for (auto p : points) out.remove_point(p);
  return out;
}

ArcMultiset random_arc(std::shared_ptr<const Geometry> g, int r, std::uint64_t target_n,
                       std::uint64_t seed) {
  if (r < g->k() - 1) throw InputError("r below the dimension floor k-1");
  if (target_n == 0) throw InputError("target_n must be at least 1");
  const std::size_t n = g->num_points();
  std::vector<PointIdx> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<PointIdx>(i);
  SplitMix64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i)
    std::swap(order[i], order[rng.below(i + 1)]);

  std::vector<std::uint32_t> counts(g->num_hyperplanes(), 0);
  std::vector<std::uint32_t> mult(n, 0);
  std::uint64_t placed = 0;
  for (PointIdx p : order) {
    if (placed >= target_n) break;
    bool fits = true;
    g->pencil_row(p).for_each_set([&](std::size_t h) {
      if (counts[h] >= static_cast<std::uint32_t>(r)) fits = false;
    });
    if (!fits) continue;
    mult[p] = 1;
    ++placed;
    g->pencil_row(p).for_each_set([&](std::size_t h) { ++counts[h]; });
  }
  return ArcMultiset::from_multiplicities(std::move(g), std::move(mult));
}

}  // namespace arcgeom
