#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arcgeom/arc.hpp"

namespace arcgeom {

enum class SearchMode { Find, ProveMax };

struct SearchOptions {
  SearchMode mode = SearchMode::ProveMax;
  std::uint64_t target = 0;        // find mode: stop at this size
  int workers = 1;                 // prove mode: subtrees are distributed
  std::uint64_t max_nodes = 0;     // 0 = unlimited
  double budget_seconds = 0;       // 0 = unlimited
};

struct SearchResult {
  std::uint64_t best_n = 0;
  std::optional<ArcMultiset> best_arc;
  std::optional<std::uint64_t> target;
  bool target_reached = false;
  bool proved_max = false;  // only after the exhaustive sweep completed
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
  double seconds = 0;
  std::vector<std::string> pruning_rules;
  std::vector<std::string> notes;
};

/// Depth-first backtracking over point indices in increasing canonical
/// order; the state is the per-hyperplane intersection count.  Candidates
/// on a hyperplane that already reached r are pruned, as are branches that
/// cannot beat the incumbent.
///
/// ProveMax explores exhaustively (first point fixed to index 0, justified
/// in the notes) and is deterministic in every field, including node
/// counts, regardless of the worker count: subtrees are explored with
/// local incumbents only and reduced in index order.  Find walks the tree
/// sequentially and stops at the first arc of the target size.
SearchResult search_max_arc(std::shared_ptr<const Geometry> g, int r, const SearchOptions& opts);

}  // namespace arcgeom
