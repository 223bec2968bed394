#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcgeom/arc.hpp"

namespace arcgeom {

enum class ExtendMethod { Scan, Constructive };

struct CheckEntry {
  std::string name;
  bool pass = false;
  bool gating = true;  // informational entries never block emission
  std::string detail;
};

/// Result of an extension computation.  Every candidate has been re-verified
/// by insertion (the certificate never trusts the search path), and the
/// checks transcript records each verification so an independent reader can
/// replay them against the arc file alone.
struct ExtensionCertificate {
  ExtendMethod method = ExtendMethod::Scan;
  std::vector<PointIdx> candidates;
  bool unique = false;
  /// For the constructive method with k >= 4: the lifted tangent line at
  /// each arc point, in support order.
  std::vector<std::pair<PointIdx, Flat>> tangent_lines;
  std::optional<PointIdx> common_point;
  std::vector<CheckEntry> checks;

  bool all_gating_pass() const {
    for (const auto& c : checks)
      if (c.gating && !c.pass) return false;
    return true;
  }
};

/// Exhaustive candidate scan: every point lying on no secant, each
/// re-verified to yield a valid (n+1, r)-arc.  Sound for any parameters; no
/// uniqueness claim is made here.
ExtensionCertificate extension_candidates(const ArcMultiset& arc);

struct ExtendOptions {
  int workers = 1;
  /// Also run the pair-plane diagnostic (quotients at spans of point pairs,
  /// k >= 5 only).  Proof scaffolding, not needed for a verified answer.
  bool check_pair_planes = false;
};

/// Constructive unique extension for near-maximal arcs.  Hypotheses
/// (enforced, each with a named violation): k >= 3, 0 < s < q-2,
/// (s+2) | q, n = (s+1)(q+1)+k-3, and the arc is a valid set arc.
///
/// For k = 3 this delegates to the scan and asserts a unique candidate.
/// For k >= 4 it runs the quotient recursion: at each arc point the
/// punctured arc maps to a near-maximal arc one dimension down whose unique
/// extension point lifts to a tangent line; the common point of the first
/// two lines is the candidate, then every emitted fact is re-checked by
/// direct incidence tests in the parent geometry.
ExtensionCertificate extend_unique(const ArcMultiset& arc, const ExtendOptions& opts = {});

/// The lifted tangent line at one arc point (k >= 4 instances only):
/// contained in every multi-point tangent hyperplane through the point and
/// meeting every secant through it only there.  Both properties re-verified
/// directly in the parent geometry.
Flat tangent_line_at(const ArcMultiset& arc, PointIdx arc_point);

}  // namespace arcgeom
