#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arcgeom/geometry.hpp"

namespace arcgeom {

/// A point multiset in a geometry: one non-negative multiplicity per point
/// index.  n is the multiplicity sum.  "Is a set" means all multiplicities
/// are at most 1.
class ArcMultiset {
 public:
  /// Multiplicity-1 arc from distinct point indices; duplicates are rejected.
  static ArcMultiset from_points(std::shared_ptr<const Geometry> g, const std::vector<PointIdx>& points);
  static ArcMultiset from_multiplicities(std::shared_ptr<const Geometry> g, std::vector<std::uint32_t> mult);

  const Geometry& geometry() const { return *geom_; }
  std::shared_ptr<const Geometry> geometry_ptr() const { return geom_; }
  std::uint64_t n() const { return n_; }
  std::uint32_t multiplicity(PointIdx p) const { return mult_[p]; }
  const std::vector<std::uint32_t>& multiplicities() const { return mult_; }
  /// Indices with positive multiplicity, ascending.
  const std::vector<PointIdx>& support() const { return support_; }
  bool is_set() const;

  void add_point(PointIdx p, std::uint32_t count = 1);
  /// Decrements a multiplicity; deleting an absent point is an error.
  void remove_point(PointIdx p, std::uint32_t count = 1);
  ArcMultiset with_point(PointIdx p) const;
  ArcMultiset without_point(PointIdx p) const;

  bool operator==(const ArcMultiset& o) const { return mult_ == o.mult_; }

 private:
  ArcMultiset(std::shared_ptr<const Geometry> g, std::vector<std::uint32_t> mult);
  void rebuild_support();

  std::shared_ptr<const Geometry> geom_;
  std::vector<std::uint32_t> mult_;
  std::vector<PointIdx> support_;
  std::uint64_t n_ = 0;
};

/// Census of hyperplane intersections, counted with multiplicity.
/// Following the convention used throughout: a hyperplane is a secant when
/// it meets the arc in exactly r points, a tangent when it meets it in
/// between 1 and r-1 points, and external when it misses it.
struct ArcProfile {
  std::uint64_t n = 0;
  int r = 0;        // max hyperplane intersection
  int s = 0;        // defect parameter r - (k-1)
  std::map<int, std::uint32_t> histogram;     // intersection count -> #hyperplanes
  std::vector<std::uint32_t> counts;          // per-hyperplane intersection
  std::vector<PointIdx> secants, tangents, externals;
};

/// Exact census via the incidence bit-rows.  Deterministic regardless of
/// worker count (workers split the hyperplane range; the merge is by index).
ArcProfile profile(const ArcMultiset& arc, int workers = 1);

struct ArcDiagnostics {
  bool pass = false;
  int observed_r = 0;
  std::string reason;
  std::optional<PointIdx> witness_hyperplane;
};

/// Checks that the multiset is an (n, r)-arc: every hyperplane meets it in
/// at most r points, some hyperplane in exactly r, and n > r.  Queries with
/// r < k-1 are malformed and rejected.
ArcDiagnostics verify_arc(const ArcMultiset& arc, int r);

enum class Bound { BelowBound, Maximal, AboveBound };

struct MaximalityStatus {
  Bound status = Bound::BelowBound;
  long long bound = 0;  // (s+1)(q+1) + k - 2 at the profile's s
  long long gap = 0;    // bound - n, nonzero only below the bound
};

MaximalityStatus maximality_status(const ArcProfile& prof, const Geometry& g);

struct CapViolation {
  Flat flat;
  std::uint64_t points_with_multiplicity = 0;
};

/// Result of the (k-3)-flat cap check.  Applicable when n > s(q+1)+k-1; a
/// valid arc of those sizes must produce an empty violation list (for k=3
/// the flats are points, so this is multiplicity <= 1).
struct CapReport {
  bool applicable = false;
  std::uint64_t threshold = 0;  // s(q+1)+k-1
  std::uint64_t cap = 0;        // k-2
  std::vector<CapViolation> violations;
  bool pass() const { return !applicable || violations.empty(); }
};

CapReport flat_cap_check(const ArcMultiset& arc);

/// True when no point (including raising an existing multiplicity) can be
/// added while keeping every hyperplane at or below the current r;
/// equivalently, every point of the geometry lies on some secant.
bool is_complete(const ArcMultiset& arc);

/// Points lying on no secant of the arc, ascending.  Adding any of them (and
/// only them) keeps every hyperplane within the current r.
std::vector<PointIdx> points_off_secants(const ArcMultiset& arc, const ArcProfile& prof);

}  // namespace arcgeom
