#include "arcgeom/arc.hpp"

#include <algorithm>
#include <thread>

#include "arcgeom/errors.hpp"

namespace arcgeom {

ArcMultiset::ArcMultiset(std::shared_ptr<const Geometry> g, std::vector<std::uint32_t> mult)
    : geom_(std::move(g)), mult_(std::move(mult)) {
  if (mult_.size() != geom_->num_points())
    throw InputError("multiplicity vector length does not match the geometry");
  rebuild_support();
  if (n_ == 0) throw InputError("arc must contain at least one point");
}

ArcMultiset ArcMultiset::from_points(std::shared_ptr<const Geometry> g, const std::vector<PointIdx>& points) {
  std::vector<std::uint32_t> mult(g->num_points(), 0);
  for (auto p : points) {
    if (p >= g->num_points()) throw InputError("point index out of range");
    if (mult[p]) throw InputError("duplicate point index " + std::to_string(p));
    mult[p] = 1;
  }
  return ArcMultiset(std::move(g), std::move(mult));
}

ArcMultiset ArcMultiset::from_multiplicities(std::shared_ptr<const Geometry> g, std::vector<std::uint32_t> mult) {
  return ArcMultiset(std::move(g), std::move(mult));
}

void ArcMultiset::rebuild_support() {
  support_.clear();
  n_ = 0;
  for (PointIdx p = 0; p < mult_.size(); ++p) {
    if (mult_[p]) {
      support_.push_back(p);
      n_ += mult_[p];
    }
  }
}

bool ArcMultiset::is_set() const {
  return std::all_of(support_.begin(), support_.end(), [&](PointIdx p) { return mult_[p] <= 1; });
}

void ArcMultiset::add_point(PointIdx p, std::uint32_t count) {
  if (p >= mult_.size()) throw InputError("point index out of range");
  mult_[p] += count;
  rebuild_support();
}

void ArcMultiset::remove_point(PointIdx p, std::uint32_t count) {
  if (p >= mult_.size()) throw InputError("point index out of range");
  if (mult_[p] < count) throw InputError("deleting a point that is not in the arc");
  mult_[p] -= count;
  rebuild_support();
  if (n_ == 0) throw InputError("removal would empty the arc");
}

ArcMultiset ArcMultiset::with_point(PointIdx p) const {
  ArcMultiset out = *this;
  out.add_point(p);
  return out;
}

ArcMultiset ArcMultiset::without_point(PointIdx p) const {
  ArcMultiset out = *this;
  out.remove_point(p);
  return out;
}

ArcProfile profile(const ArcMultiset& arc, int workers) {
  const Geometry& g = arc.geometry();
  const std::size_t nh = g.num_hyperplanes();
  ArcProfile prof;
  prof.n = arc.n();
  prof.counts.assign(nh, 0);

  auto census = [&](std::size_t from, std::size_t to) {
    for (std::size_t h = from; h < to; ++h) {
      const Bitset& row = g.hyperplane_row(static_cast<PointIdx>(h));
      std::uint32_t c = 0;
      for (PointIdx p : arc.support())
        if (row.test(p)) c += arc.multiplicity(p);
      prof.counts[h] = c;
    }
  };

  if (workers <= 1 || nh < 128) {
    census(0, nh);
  } else {
    // Contiguous chunks with disjoint writes; the result does not depend on
    // the number of workers.
    std::size_t nw = std::min<std::size_t>(workers, nh);
    std::vector<std::thread> pool;
    std::size_t chunk = (nh + nw - 1) / nw;
    for (std::size_t w = 0; w < nw; ++w) {
      std::size_t from = w * chunk, to = std::min(nh, from + chunk);
      if (from < to) pool.emplace_back(census, from, to);
    }
    for (auto& t : pool) t.join();
  }

  for (std::size_t h = 0; h < nh; ++h) {
    prof.histogram[static_cast<int>(prof.counts[h])]++;
    prof.r = std::max(prof.r, static_cast<int>(prof.counts[h]));
  }
  prof.s = prof.r - (g.k() - 1);
  for (std::size_t h = 0; h < nh; ++h) {
    auto c = prof.counts[h];
    if (c == 0)
      prof.externals.push_back(static_cast<PointIdx>(h));
    else if (static_cast<int>(c) == prof.r)
      prof.secants.push_back(static_cast<PointIdx>(h));
    else
      prof.tangents.push_back(static_cast<PointIdx>(h));
  }
  return prof;
}

ArcDiagnostics verify_arc(const ArcMultiset& arc, int r) {
  const Geometry& g = arc.geometry();
  if (r < g.k() - 1)
    throw InputError("r = " + std::to_string(r) + " is below the dimension floor k-1 = " +
                     std::to_string(g.k() - 1));
  ArcProfile prof = profile(arc);
  ArcDiagnostics d;
  d.observed_r = prof.r;
  if (prof.r > r) {
    for (std::size_t h = 0; h < prof.counts.size(); ++h) {
      if (static_cast<int>(prof.counts[h]) > r) {
        d.witness_hyperplane = static_cast<PointIdx>(h);
        break;
      }
    }
    d.reason = "hyperplane " + std::to_string(*d.witness_hyperplane) + " meets the arc in " +
               std::to_string(prof.counts[*d.witness_hyperplane]) + " > r points";
    return d;
  }
  if (prof.r < r) {
    d.reason = "no hyperplane meets the arc in exactly r = " + std::to_string(r) +
               " points (max is " + std::to_string(prof.r) + ")";
    return d;
  }
  if (arc.n() <= static_cast<std::uint64_t>(r)) {
    d.reason = "arc size n = " + std::to_string(arc.n()) + " must exceed r";
    return d;
  }
  d.pass = true;
  return d;
}

MaximalityStatus maximality_status(const ArcProfile& prof, const Geometry& g) {
  MaximalityStatus m;
  const long long q = g.field().q();
  m.bound = static_cast<long long>(prof.s + 1) * (q + 1) + g.k() - 2;
  long long n = static_cast<long long>(prof.n);
  if (n < m.bound) {
    m.status = Bound::BelowBound;
    m.gap = m.bound - n;
  } else if (n == m.bound) {
    m.status = Bound::Maximal;
  } else {
    // Impossible for anything that passed verify_arc; kept as an explicit
    // inconsistency signal.
    m.status = Bound::AboveBound;
    m.gap = m.bound - n;
  }
  return m;
}

CapReport flat_cap_check(const ArcMultiset& arc) {
  const Geometry& g = arc.geometry();
  const int k = g.k();
  if (k < 3) throw InputError("cap check needs k >= 3");
  ArcProfile prof = profile(arc);
  const std::uint64_t q = g.field().q();

  CapReport report;
  report.threshold = static_cast<std::uint64_t>(prof.s) * (q + 1) + k - 1;
  report.cap = static_cast<std::uint64_t>(k) - 2;
  report.applicable = arc.n() > report.threshold;
  if (!report.applicable) return report;

  // Any flat of projective dimension <= k-3 holding >= k-1 arc points is
  // spanned by at most k-2 of its arc points, so spans of small support
  // subsets reach every possible violation.
  const auto& sup = arc.support();
  const int max_subset = k - 2;

  auto count_in_flat = [&](const Flat& flat) {
    std::uint64_t c = 0;
    for (PointIdx p : sup)
      if (g.flat_contains(flat, p)) c += arc.multiplicity(p);
    return c;
  };
  auto consider = [&](const Flat& flat) {
    if (flat.proj_dim() > k - 3) return;
    for (const auto& v : report.violations)
      if (v.flat == flat) return;
    std::uint64_t c = count_in_flat(flat);
    if (c >= static_cast<std::uint64_t>(k) - 1) report.violations.push_back({flat, c});
  };

  // Subsets of the support of size 1..k-2, in lexicographic order.
  std::vector<std::size_t> stack;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!stack.empty()) {
      std::vector<PointIdx> pts;
      for (auto i : stack) pts.push_back(sup[i]);
      consider(g.span_of(pts));
    }
    if (static_cast<int>(stack.size()) == max_subset) return;
    for (std::size_t i = from; i < sup.size(); ++i) {
      stack.push_back(i);
      self(self, i + 1);
      stack.pop_back();
    }
  };
  rec(rec, 0);
  return report;
}

std::vector<PointIdx> points_off_secants(const ArcMultiset& arc, const ArcProfile& prof) {
  const Geometry& g = arc.geometry();
  Bitset on_secant(g.num_points());
  for (PointIdx h : prof.secants) on_secant |= g.hyperplane_row(h);
  std::vector<PointIdx> out;
  for (PointIdx p = 0; p < g.num_points(); ++p)
    if (!on_secant.test(p)) out.push_back(p);
  return out;
}

bool is_complete(const ArcMultiset& arc) {
  ArcProfile prof = profile(arc);
  return points_off_secants(arc, prof).empty();
}

}  // namespace arcgeom
