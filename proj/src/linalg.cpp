#include "arcgeom/linalg.hpp"

#include <algorithm>

namespace arcgeom {

Mat rref(const Field& f, Mat rows, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  if (rows.empty()) return rows;
  const std::size_t ncols = rows[0].size();
  std::size_t lead = 0;
  std::size_t r = 0;
  std::vector<int> piv;
  for (; r < rows.size() && lead < ncols; ++lead) {
    std::size_t i = r;
    while (i < rows.size() && rows[i][lead] == 0) ++i;
    if (i == rows.size()) continue;
    std::swap(rows[r], rows[i]);
    felt pinv = f.inv(rows[r][lead]);
    for (std::size_t c = lead; c < ncols; ++c) rows[r][c] = f.mul(rows[r][c], pinv);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == r || rows[j][lead] == 0) continue;
      felt factor = rows[j][lead];
      for (std::size_t c = lead; c < ncols; ++c)
        rows[j][c] = f.sub(rows[j][c], f.mul(factor, rows[r][c]));
    }
    piv.push_back(static_cast<int>(lead));
    ++r;
  }
  rows.resize(r);
  if (pivots) *pivots = std::move(piv);
  return rows;
}

int rank(const Field& f, Mat rows) { return static_cast<int>(rref(f, std::move(rows)).size()); }

Vec reduce_by(const Field& f, const Mat& basis, const std::vector<int>& pivots, Vec v) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    felt c = v[pivots[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, basis[i][j]));
  }
  return v;
}

Mat transpose(const Mat& m, std::size_t cols) {
  Mat t(cols, Vec(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

Mat nullspace(const Field& f, const Mat& m, std::size_t cols) {
  std::vector<int> pivots;
  Mat rr = rref(f, m, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  Mat basis;
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    Vec x(cols, 0);
    x[j] = 1;
    for (std::size_t i = 0; i < rr.size(); ++i) x[pivots[i]] = f.neg(rr[i][j]);
    basis.push_back(std::move(x));
  }
  return rref(f, std::move(basis));
}

Mat intersect_rowspaces(const Field& f, const Mat& a, const Mat& b, std::size_t cols) {
  if (a.empty() || b.empty()) return {};
  Mat stacked = a;
  stacked.insert(stacked.end(), b.begin(), b.end());
  // w (a; b) = 0  <=>  sum_i w_i a_i = -sum_j w_{r1+j} b_j, a vector in both
  // row spaces; every intersection vector arises this way.
  Mat w_basis = nullspace(f, transpose(stacked, cols), stacked.size());
  Mat meet;
  for (const auto& w : w_basis) {
    Vec u(cols, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) u[j] = f.add(u[j], f.mul(w[i], a[i][j]));
    meet.push_back(std::move(u));
  }
  return rref(f, std::move(meet));
}

bool normalize_projective(const Field& f, Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1) {
      felt s = f.inv(v[i]);
      for (std::size_t j = i; j < v.size(); ++j) v[j] = f.mul(v[j], s);
    }
    return true;
  }
  return false;
}

felt dot(const Field& f, const Vec& a, const Vec& b) {
  felt acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

}  // namespace arcgeom
