#include "arcgeom/geometry.hpp"

#include <algorithm>

#include "arcgeom/errors.hpp"

namespace arcgeom {

std::shared_ptr<const Geometry> Geometry::build(Field field, int k) {
  if (k < 2) throw InputError("projective geometry needs k >= 2");
  const std::uint64_t q = field.q();
  std::uint64_t qk = 1;
  for (int i = 0; i < k; ++i) {
    qk *= q;
    if (qk > (std::uint64_t{1} << 24))
      throw GuardExceeded("q^k exceeds the 2^24 candidate-vector guard");
  }

  auto g = std::shared_ptr<Geometry>(new Geometry());
  g->field_ = std::move(field);
  g->k_ = k;
  const Field& f = g->field_;

  g->pg_count_.assign(k + 1, 0);
  std::uint64_t qp = 1;
  for (int m = 1; m <= k; ++m) {
    qp *= q;
    g->pg_count_[m] = static_cast<std::size_t>((qp - 1) / (q - 1));
  }
  g->num_points_ = g->pg_count_[k];
  g->hyperplane_size_ = g->pg_count_[k - 1];

  // Canonical enumeration: pivot position from k-1 down to 0, suffix counted
  // in base q with the last coordinate fastest.  This is exactly the
  // lexicographic order on normalized coordinate tuples.
  g->coords_.reserve(g->num_points_ * k);
  std::vector<felt> v(k, 0);
  for (int pivot = k - 1; pivot >= 0; --pivot) {
    std::fill(v.begin(), v.end(), felt{0});
    v[pivot] = 1;
    const int free_from = pivot + 1;
    while (true) {
      g->coords_.insert(g->coords_.end(), v.begin(), v.end());
      int j = k - 1;
      for (; j >= free_from; --j) {
        if (v[j] + 1u < q) {
          v[j] = static_cast<felt>(v[j] + 1);
          break;
        }
        v[j] = 0;
      }
      if (j < free_from) break;
    }
  }
  if (g->coords_.size() != g->num_points_ * k)
    throw VerificationError("point enumeration count mismatch");

  // Dense incidence: dot(point_i, point_j) == 0, symmetric in i and j.
  const std::size_t n = g->num_points_;
  g->rows_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    const felt* a = g->coords_.data() + i * k;
    for (std::size_t j = i; j < n; ++j) {
      const felt* b = g->coords_.data() + j * k;
      felt acc = 0;
      for (int t = 0; t < k; ++t) acc = f.add(acc, f.mul(a[t], b[t]));
      if (acc == 0) {
        g->rows_[i].set(j);
        g->rows_[j].set(i);
      }
    }
  }
  return g;
}

std::optional<PointIdx> Geometry::index_of(Vec coords) const {
  if (static_cast<int>(coords.size()) != k_) throw InputError("coordinate vector has wrong length");
  for (auto c : coords)
    if (c >= field_.q()) throw InputError("coordinate code outside the field");
  if (!normalize_projective(field_, coords)) return std::nullopt;
  int pivot = 0;
  while (coords[pivot] == 0) ++pivot;
  // Points with pivot position j occupy a contiguous block that starts after
  // all blocks with larger pivots; inside the block the free suffix counts
  // in base q.
  std::size_t base = pg_count_[k_ - 1 - pivot];
  std::uint64_t offset = 0;
  for (int j = pivot + 1; j < k_; ++j) offset = offset * field_.q() + coords[j];
  return static_cast<PointIdx>(base + offset);
}

Flat Geometry::span_of(const std::vector<PointIdx>& points) const {
  Mat rows;
  rows.reserve(points.size());
  for (auto p : points) {
    if (p >= num_points_) throw InputError("point index out of range");
    rows.push_back(point_vec(p));
  }
  return Flat{rref(field_, std::move(rows))};
}

Flat Geometry::span_rows(Mat rows) const { return Flat{rref(field_, std::move(rows))}; }

bool Geometry::flat_contains(const Flat& flat, PointIdx p) const {
  if (flat.basis.empty()) return false;
  // Flat bases are rref by construction; the pivot of a row is its first
  // nonzero column.
  std::vector<int> pivots(flat.basis.size());
  for (std::size_t i = 0; i < flat.basis.size(); ++i) {
    int c = 0;
    while (flat.basis[i][c] == 0) ++c;
    pivots[i] = c;
  }
  Vec residue = reduce_by(field_, flat.basis, pivots, point_vec(p));
  return std::all_of(residue.begin(), residue.end(), [](felt c) { return c == 0; });
}

std::vector<PointIdx> Geometry::flat_points(const Flat& flat) const {
  std::vector<PointIdx> result;
  const std::size_t m = flat.basis.size();
  if (m == 0) return result;
  const std::uint64_t q = field_.q();
  // Normalized coefficient tuples over the basis rows enumerate the flat's
  // points exactly once.
  std::vector<felt> coeff(m, 0);
  for (int pivot = static_cast<int>(m) - 1; pivot >= 0; --pivot) {
    std::fill(coeff.begin(), coeff.end(), felt{0});
    coeff[pivot] = 1;
    const int free_from = pivot + 1;
    while (true) {
      Vec v(k_, 0);
      for (std::size_t i = 0; i < m; ++i) {
        if (coeff[i] == 0) continue;
        for (int j = 0; j < k_; ++j) v[j] = field_.add(v[j], field_.mul(coeff[i], flat.basis[i][j]));
      }
      auto idx = index_of(std::move(v));
      result.push_back(*idx);
      int j = static_cast<int>(m) - 1;
      for (; j >= free_from; --j) {
        if (coeff[j] + 1u < q) {
          coeff[j] = static_cast<felt>(coeff[j] + 1);
          break;
        }
        coeff[j] = 0;
      }
      if (j < free_from) break;
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<PointIdx> Geometry::hyperplanes_through(const Flat& flat) const {
  if (flat.proj_dim() > k_ - 2) throw InputError("flat is the whole space");
  std::vector<PointIdx> result;
  for (PointIdx h = 0; h < num_points_; ++h) {
    bool all = true;
    for (const auto& row : flat.basis) {
      if (dot(field_, row, point_vec(h)) != 0) {
        all = false;
        break;
      }
    }
    if (all) result.push_back(h);
  }
  return result;
}

Vec Quotient::lift_point(PointIdx quotient_point) const {
  auto qc = geometry->point(quotient_point);
  Vec v(parent->k(), 0);
  for (std::size_t i = 0; i < free_cols.size(); ++i) v[free_cols[i]] = qc[i];
  return v;
}

PointIdx Quotient::lift_hyperplane(PointIdx quotient_hyperplane) const {
  const Field& f = parent->field();
  auto h = geometry->hyperplane(quotient_hyperplane);
  const int k = parent->k();
  // The reduction map (eliminate pivot coordinates, restrict to free
  // columns) is linear; composing it with the quotient dual vector gives a
  // parent dual vector, evaluated here on the unit vectors.
  Vec lifted(k, 0);
  for (int j = 0; j < k; ++j) {
    Vec unit(k, 0);
    unit[j] = 1;
    Vec red = reduce_by(f, flat.basis, pivots, std::move(unit));
    felt acc = 0;
    for (std::size_t i = 0; i < free_cols.size(); ++i) acc = f.add(acc, f.mul(red[free_cols[i]], h[i]));
    lifted[j] = acc;
  }
  auto idx = parent->index_of(std::move(lifted));
  if (!idx) throw VerificationError("quotient hyperplane lift is degenerate");
  return *idx;
}

Quotient build_quotient(std::shared_ptr<const Geometry> g, Flat flat) {
  const int k = g->k();
  const int d = flat.proj_dim();
  if (d > k - 3) throw InputError("flat too large: quotient would drop below a projective line");

  Quotient out;
  out.parent = g;
  const Field& f = g->field();
  out.flat.basis = rref(f, flat.basis, &out.pivots);
  std::vector<bool> is_pivot(k, false);
  for (int p : out.pivots) is_pivot[p] = true;
  for (int j = 0; j < k; ++j)
    if (!is_pivot[j]) out.free_cols.push_back(j);

  out.geometry = Geometry::build(f, k - d - 1);

  out.point_map.assign(g->num_points(), -1);
  for (PointIdx p = 0; p < g->num_points(); ++p) {
    Vec red = reduce_by(f, out.flat.basis, out.pivots, g->point_vec(p));
    Vec proj(out.free_cols.size(), 0);
    bool nonzero = false;
    for (std::size_t i = 0; i < out.free_cols.size(); ++i) {
      proj[i] = red[out.free_cols[i]];
      nonzero |= proj[i] != 0;
    }
    if (!nonzero) continue;  // inside the flat
    auto idx = out.geometry->index_of(std::move(proj));
    out.point_map[p] = static_cast<std::int32_t>(*idx);
  }
  return out;
}

}  // namespace arcgeom
