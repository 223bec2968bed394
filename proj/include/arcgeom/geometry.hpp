#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "arcgeom/bitset.hpp"
#include "arcgeom/field.hpp"
#include "arcgeom/linalg.hpp"

namespace arcgeom {

using PointIdx = std::uint32_t;

/// A projective subspace, stored as the canonical rref basis of its
/// underlying vector space.  proj_dim = rank - 1; the empty flat has
/// proj_dim -1.  Two flats are equal iff their bases are equal.
struct Flat {
  Mat basis;

  int proj_dim() const { return static_cast<int>(basis.size()) - 1; }
  bool operator==(const Flat&) const = default;
};

/// Fully enumerated PG(k-1, q): canonical point and hyperplane orderings
/// plus a dense point/hyperplane incidence matrix stored as bit-rows.
///
/// Points are the normalized vectors of F_q^k (first nonzero coordinate 1)
/// sorted lexicographically by coordinate codes.  Hyperplanes use the same
/// enumeration of dual vectors under the standard dot-product form, so the
/// incidence matrix is symmetric: the bit-row of hyperplane h over points
/// doubles as the pencil of hyperplanes through point h.
///
/// Immutable after build; all queries are const and thread-safe.
class Geometry {
 public:
  /// Enumerates PG(k-1, q).  Guard: q^k <= 2^24 candidate vectors.
  static std::shared_ptr<const Geometry> build(Field field, int k);

  const Field& field() const { return field_; }
  int k() const { return k_; }
  std::size_t num_points() const { return num_points_; }
  std::size_t num_hyperplanes() const { return num_points_; }
  /// Points per hyperplane: (q^{k-1} - 1)/(q - 1).
  std::size_t hyperplane_size() const { return hyperplane_size_; }

  std::span<const felt> point(PointIdx i) const { return {coords_.data() + std::size_t{i} * k_, static_cast<std::size_t>(k_)}; }
  std::span<const felt> hyperplane(PointIdx h) const { return point(h); }
  Vec point_vec(PointIdx i) const { auto s = point(i); return Vec(s.begin(), s.end()); }

  /// Bit-row of points incident with hyperplane h.
  const Bitset& hyperplane_row(PointIdx h) const { return rows_[h]; }
  /// Bit-row of hyperplanes through point p (same row by self-duality).
  const Bitset& pencil_row(PointIdx p) const { return rows_[p]; }

  bool incident(PointIdx p, PointIdx h) const { return rows_[h].test(p); }

  /// Canonical index of a coordinate vector; nullopt for the zero vector.
  std::optional<PointIdx> index_of(Vec coords) const;

  Flat span_of(const std::vector<PointIdx>& points) const;
  Flat span_rows(Mat rows) const;
  bool flat_contains(const Flat& flat, PointIdx p) const;
  /// All point indices inside the flat, ascending.
  std::vector<PointIdx> flat_points(const Flat& flat) const;
  /// Hyperplane indices containing the flat, ascending; the flat must not be
  /// the whole space.  Count is (q^{k-1-d} - 1)/(q - 1) for proj_dim d.
  std::vector<PointIdx> hyperplanes_through(const Flat& flat) const;

 private:
  Geometry() = default;

  Field field_{Field::make(2, 1)};
  int k_ = 0;
  std::size_t num_points_ = 0;
  std::size_t hyperplane_size_ = 0;
  std::vector<felt> coords_;   // num_points * k, canonical order
  std::vector<Bitset> rows_;   // per hyperplane, over point indices
  std::vector<std::size_t> pg_count_;  // pg_count_[m] = (q^m - 1)/(q - 1)
};

/// Quotient of a geometry by a flat: a fresh canonical PG(k-d-2, q) plus the
/// map sending each point P outside the flat to the quotient point that
/// represents span(flat, P).  Points inside the flat map to -1.
struct Quotient {
  std::shared_ptr<const Geometry> parent;
  std::shared_ptr<const Geometry> geometry;
  Flat flat;
  std::vector<int> pivots;            // pivot columns of the flat basis
  std::vector<int> free_cols;         // complement columns, ascending
  std::vector<std::int32_t> point_map;

  /// A parent-space representative of a quotient point (free-column embed).
  Vec lift_point(PointIdx quotient_point) const;
  /// The parent hyperplane corresponding to a quotient hyperplane; it
  /// contains the flat, and parent incidence with it matches quotient
  /// incidence through point_map.
  PointIdx lift_hyperplane(PointIdx quotient_hyperplane) const;
};

/// Builds the quotient geometry.  Requires proj_dim(flat) <= k-3 so the
/// quotient is at least a projective line.
Quotient build_quotient(std::shared_ptr<const Geometry> g, Flat flat);

}  // namespace arcgeom
