#include "arcgeom/mtable.hpp"

#include <sstream>

#include "arcgeom/constructions.hpp"
#include "arcgeom/errors.hpp"
#include "arcgeom/extension.hpp"

namespace arcgeom {
namespace {

bool is_pow2(std::uint64_t x) { return x >= 2 && (x & (x - 1)) == 0; }

std::optional<std::uint64_t> geometry_size(std::uint32_t q, int k) {
  std::uint64_t qk = 1;
  for (int i = 0; i < k; ++i) {
    qk *= q;
    if (qk > (std::uint64_t{1} << 24)) return std::nullopt;
  }
  return (qk - 1) / (q - 1);
}

MTableCell compute_cell(const Field& field, int k, int s, const MTableOptions& opts) {
  const std::uint32_t q = field.q();
  MTableCell cell;
  cell.k = k;
  cell.q = q;
  cell.s = s;
  const int r = k - 1 + s;

  // Certified upper bound.
  const bool planar = k == 3;
  const bool two_power_case = is_pow2(s + 2) && is_pow2(q) && s > 0 && s <= static_cast<int>(q) - 2;
  if (planar && two_power_case) {
    cell.upper = std::uint64_t{static_cast<std::uint32_t>(s) + 1} * (q + 1) + 1;
    cell.upper_citation = "planar maximal arcs of 2-power degree (Denniston; Ball-Blokhuis-Mazzocca)";
  } else if (planar && s > 0 && s < static_cast<int>(q) - 2) {
    cell.upper = std::uint64_t{static_cast<std::uint32_t>(s) + 1} * (q + 1) - 1;
    cell.upper_citation = "planar bound for degrees not dividing q (Barlotti; Ball-Blokhuis-Mazzocca)";
  } else {
    cell.upper = std::uint64_t{static_cast<std::uint32_t>(s) + 1} * (q + 1) + k - 2;
    cell.upper_citation = "hyperplane counting bound";
  }

  // Equality criterion for k >= 4: cited, never asserted without a witness.
  if (!planar && s > 0 && s < static_cast<int>(q) - 2 && two_power_case &&
      q % static_cast<std::uint32_t>(s + 2) == 0) {
    const std::uint64_t planar_max = std::uint64_t{static_cast<std::uint32_t>(s) + 1} * (q + 1) + 1;
    const std::uint64_t threshold = std::uint64_t{static_cast<std::uint32_t>(s) + 1} * (q + 1) + k - 3;
    cell.footnotes.push_back(
        "equality criterion applies the planar threshold m(3,q) >= (s+1)(q+1)+k-3 literally");
    if (planar_max >= threshold) {
      cell.cited_equality = cell.upper;
    } else {
      cell.footnotes.push_back(
          "threshold exceeds the planar maximum (s+1)(q+1)+1, so the criterion is vacuous here");
    }
  }

  auto size = geometry_size(q, k);
  if (!size) {
    cell.provenance = "upper_bound_only";
    cell.footnotes.push_back("geometry exceeds the enumeration guard; no search attempted");
    return cell;
  }

  auto g = Geometry::build(field, k);

  // Witnesses from constructions first, searches second.
  std::uint64_t witness = 0;
  if (planar && two_power_case && q % static_cast<std::uint32_t>(s + 2) == 0 &&
      static_cast<std::uint32_t>(s + 2) < q) {
    auto dn = denniston(g, static_cast<std::uint32_t>(s + 2));
    witness = dn.arc.n();
  } else if (planar && s == 0) {
    auto c = conic(g);
    auto cert = extension_candidates(c);
    witness = c.n() + cert.candidates.size();  // nucleus extends even q to a hyperoval
  }

  if (witness < cell.upper && opts.find_nodes) {
    SearchOptions fo{SearchMode::Find, cell.upper, 1, opts.find_nodes, 0};
    auto res = search_max_arc(g, r, fo);
    cell.search_nodes += res.nodes;
    witness = std::max(witness, res.best_n);
  }
  if (witness) cell.witness_n = witness;

  if (witness == cell.upper) {
    cell.exact = cell.upper;
    cell.provenance = "witness_found";
    return cell;
  }

  if (opts.prove_nodes && g->num_points() <= (1u << 14)) {
    SearchOptions po{SearchMode::ProveMax, 0, opts.workers, opts.prove_nodes, 0};
    auto res = search_max_arc(g, r, po);
    cell.search_nodes += res.nodes;
    if (res.best_n > witness) cell.witness_n = witness = res.best_n;
    if (res.proved_max) {
      cell.exact = res.best_n;
      cell.provenance = "proved_by_search";
      return cell;
    }
    cell.footnotes.push_back("prove-max stopped at the node budget");
  }

  cell.provenance = "upper_bound_only";
  return cell;
}

}  // namespace

std::vector<MTableCell> compute_mtable(const MTableOptions& opts) {
  if (opts.k < 3) throw InputError("the table starts at k = 3");
  std::vector<MTableCell> cells;
  for (auto q : opts.qs) {
    // Validate q as a prime power by constructing its field.
    std::uint32_t p = q, e = 1;
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        std::uint32_t base = d, count = 0;
        std::uint32_t left = q;
        while (left % base == 0) {
          left /= base;
          ++count;
        }
        if (left != 1) throw InputError(std::to_string(q) + " is not a prime power");
        p = base;
        e = count;
        break;
      }
    Field f = Field::make(p, e);
    for (auto s : opts.ss) {
      if (s < 0) throw InputError("s must be non-negative");
      cells.push_back(compute_cell(f, opts.k, s, opts));
    }
  }
  return cells;
}

std::string mtable_to_csv(const std::vector<MTableCell>& cells) {
  std::ostringstream out;
  out << "k,q,s,upper,exact,witness_n,cited_equality,provenance,citation,footnotes\n";
  auto opt = [](const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const auto& c : cells) {
    std::string notes;
    for (const auto& fn : c.footnotes) {
      if (!notes.empty()) notes += "; ";
      notes += fn;
    }
    out << c.k << ',' << c.q << ',' << c.s << ',' << c.upper << ',' << opt(c.exact) << ','
        << opt(c.witness_n) << ',' << opt(c.cited_equality) << ',' << c.provenance << ",\""
        << c.upper_citation << "\",\"" << notes << "\"\n";
  }
  return out.str();
}

}  // namespace arcgeom
