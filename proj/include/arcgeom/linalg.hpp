#pragma once

#include <vector>

#include "arcgeom/field.hpp"

namespace arcgeom {

using Vec = std::vector<felt>;
using Mat = std::vector<Vec>;  // rows

/// Reduced row echelon form with zero rows dropped; the result is the
/// canonical basis of the row space.  Pivot columns are reported through
/// `pivots` when given.
Mat rref(const Field& f, Mat rows, std::vector<int>* pivots = nullptr);

int rank(const Field& f, Mat rows);

/// Eliminates the pivot coordinates of v against an rref basis.  The result
/// is zero exactly when v lies in the row space.
Vec reduce_by(const Field& f, const Mat& basis, const std::vector<int>& pivots, Vec v);

/// Basis (in rref) of { x : m x^T = 0 }.
Mat nullspace(const Field& f, const Mat& m, std::size_t cols);

Mat transpose(const Mat& m, std::size_t cols);

/// Canonical basis of rowspace(a) ∩ rowspace(b); both inputs must be bases.
Mat intersect_rowspaces(const Field& f, const Mat& a, const Mat& b, std::size_t cols);

/// Scales v so its first nonzero entry is 1.  Returns false for the zero
/// vector (v is left untouched).
bool normalize_projective(const Field& f, Vec& v);

felt dot(const Field& f, const Vec& a, const Vec& b);

}  // namespace arcgeom
