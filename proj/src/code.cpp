#include "arcgeom/code.hpp"

#include <algorithm>

#include "arcgeom/errors.hpp"

namespace arcgeom {
namespace {

Mat expanded_columns(const ArcMultiset& arc) {
  Mat cols;
  for (PointIdx p : arc.support()) {
    Vec v = arc.geometry().point_vec(p);
    for (std::uint32_t m = 0; m < arc.multiplicity(p); ++m) cols.push_back(v);
  }
  return cols;
}

}  // namespace

LinearCodeView to_code(const ArcMultiset& arc) {
  const Geometry& g = arc.geometry();
  const int k = g.k();
  Mat cols = expanded_columns(arc);

  if (rank(g.field(), cols) < k)
    throw InputError("arc does not span the space: the code would be degenerate");

  LinearCodeView view;
  view.k = k;
  view.n = cols.size();
  view.generator.assign(k, Vec(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < k; ++i) view.generator[i][j] = cols[j][i];

  ArcProfile prof = profile(arc);
  view.d = static_cast<long long>(view.n) - prof.r;
  view.defect = static_cast<long long>(view.n) - k + 1 - view.d;
  view.d_dual = dual_distance(arc);
  classify(view, g.field());
  return view;
}

long long dual_distance(const ArcMultiset& arc) {
  const Geometry& g = arc.geometry();
  const Field& f = g.field();
  Mat cols = expanded_columns(arc);
  const std::size_t n = cols.size();
  const int k = g.k();

  // Increasing subset size; the first dependent sub-multiset is minimal, so
  // its span dimension is exactly t-1.
  for (int t = 2; t <= k + 1; ++t) {
    if (static_cast<std::size_t>(t) > n) break;
    std::vector<std::size_t> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    while (true) {
      Mat sub;
      for (int i = 0; i < t; ++i) sub.push_back(cols[idx[i]]);
      if (rank(f, std::move(sub)) == t - 1) return t;
      int i = t - 1;
      while (i >= 0 && idx[i] == n - t + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  // Unreachable for spanning arcs with n >= k+1; callers with n <= k can
  // only get here when every sub-multiset is independent.
  return static_cast<long long>(n) + 1;
}

void classify(LinearCodeView& view, const Field& field) {
  const long long q = field.q();
  // Identical columns mean a repeated point: columns are normalized
  // representatives, so projectivity is plain column distinctness.
  view.projective = true;
  for (std::size_t a = 0; a + 1 < view.n && view.projective; ++a)
    for (std::size_t b = a + 1; b < view.n; ++b) {
      bool same = true;
      for (int i = 0; i < view.k; ++i)
        if (view.generator[i][a] != view.generator[i][b]) {
          same = false;
          break;
        }
      if (same) {
        view.projective = false;
        break;
      }
    }

  view.length_maximal =
      static_cast<long long>(view.n) == (view.defect + 1) * (q + 1) + view.k - 2;

  if (static_cast<long long>(view.n) > view.defect * (q + 1) + view.k - 1 &&
      view.d_dual < view.k)
    throw VerificationError("structural corollary violated: n > S(q+1)+k-1 but d_dual < k");
}

std::pair<ArcMultiset, LinearCodeView> extend_code(const ArcMultiset& arc) {
  LinearCodeView before = to_code(arc);
  ExtensionCertificate cert = extend_unique(arc);
  ArcMultiset grown = arc.with_point(cert.candidates.front());
  LinearCodeView after = to_code(grown);
  if (!after.length_maximal)
    throw VerificationError("extended code is not length-maximal");
  if (after.defect != before.defect)
    throw VerificationError("extension changed the Singleton defect");
  return {std::move(grown), std::move(after)};
}

}  // namespace arcgeom
