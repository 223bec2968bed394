#pragma once

#include <cstdint>
#include <utility>

#include "arcgeom/arc.hpp"
#include "arcgeom/extension.hpp"

namespace arcgeom {

/// A linear [n, k, d]_q code presented as a projective system: the columns
/// of the generator matrix are the arc points (repeated by multiplicity) in
/// canonical order, so n - d is the largest hyperplane intersection.
struct LinearCodeView {
  Mat generator;  // k rows, n columns
  std::uint64_t n = 0;
  int k = 0;
  long long d = 0;
  long long d_dual = 0;
  long long defect = 0;  // Singleton defect S = n - k + 1 - d
  bool projective = false;
  bool length_maximal = false;  // n meets (S+1)(q+1) + k - 2
};

/// Builds the code view of an arc.  The arc must span the space (rank k);
/// rank-deficient inputs describe degenerate codes and are rejected.
LinearCodeView to_code(const ArcMultiset& arc);

/// Minimum size t of a column sub-multiset whose linear span has dimension
/// t-1.  Searched by increasing t with rank early exit; t never exceeds
/// k+1, since any k+1 columns contain a minimal dependent subset.
long long dual_distance(const ArcMultiset& arc);

/// Populates the classification flags of a view and asserts the structural
/// corollary: whenever n > S(q+1)+k-1, the dual distance must be at least
/// k (in particular the code is projective).  A violation is a bug, not a
/// property of the input, and raises VerificationError.
void classify(LinearCodeView& view, const Field& field);

/// Unique code extension for near-length-maximal inputs: runs the unique
/// arc extension, appends the new column, and re-checks that the result is
/// length-maximal with an unchanged Singleton defect.
std::pair<ArcMultiset, LinearCodeView> extend_code(const ArcMultiset& arc);

}  // namespace arcgeom
