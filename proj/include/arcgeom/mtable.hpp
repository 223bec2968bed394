#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcgeom/search.hpp"

namespace arcgeom {

/// One cell of the m-table: the largest size of a complete (n, k+s-1)-arc
/// in PG(k-1, q), with explicit provenance.  A cell never displays a value
/// the run did not prove (search) or cite (classical planar results); the
/// citation and footnotes say which.
struct MTableCell {
  int k = 0;
  std::uint32_t q = 0;
  int s = 0;

  std::uint64_t upper = 0;  // certified upper bound
  std::string upper_citation;
  std::optional<std::uint64_t> exact;       // proved or witnessed to the bound
  std::optional<std::uint64_t> witness_n;   // largest verified arc produced
  std::optional<std::uint64_t> cited_equality;  // equality criterion value, no witness
  std::string provenance;  // proved_by_search | witness_found | upper_bound_only
  std::vector<std::string> footnotes;
  std::uint64_t search_nodes = 0;
};

struct MTableOptions {
  int k = 3;
  std::vector<std::uint32_t> qs;
  std::vector<int> ss;
  /// Node budget for prove-max attempts per cell; 0 skips proving.
  std::uint64_t prove_nodes = 2'000'000;
  /// Node budget for witness hunts per cell; 0 skips hunting.
  std::uint64_t find_nodes = 500'000;
  int workers = 1;
};

std::vector<MTableCell> compute_mtable(const MTableOptions& opts);

std::string mtable_to_csv(const std::vector<MTableCell>& cells);

}  // namespace arcgeom
