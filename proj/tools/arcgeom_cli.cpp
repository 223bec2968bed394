// Command-line frontend: every subcommand reads/writes the JSON formats
// defined in the library and maps failures to stable exit codes:
//   0 success / verified      1 verification or assertion failed
//   2 malformed input         3 hypotheses unmet
//   4 resource guard exceeded
#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arcgeom/arc.hpp"
#include "arcgeom/code.hpp"
#include "arcgeom/constructions.hpp"
#include "arcgeom/errors.hpp"
#include "arcgeom/extension.hpp"
#include "arcgeom/io.hpp"
#include "arcgeom/mtable.hpp"
#include "arcgeom/search.hpp"

namespace {

using namespace arcgeom;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitHypotheses = 3;
constexpr int kExitGuard = 4;

struct FieldArgs {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::vector<std::uint32_t> modulus;

  Field build() const { return modulus.empty() ? Field::make(p, e) : Field::make(p, e, modulus); }
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
  cmd->add_option("--p", args.p, "field characteristic (prime)")->required();
  cmd->add_option("--e", args.e, "extension degree")->required();
  cmd->add_option("--modulus", args.modulus,
                  "modulus coefficients c0..ce (monic); omitted = smallest irreducible");
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << dump_canonical(j);
  else
    write_json_file(out_path, j);
}

ArcMultiset load_arc(const std::string& path) { return arc_from_json(read_json_file(path)); }

int run(int argc, char** argv) {
  CLI::App app{"arc toolkit for finite projective geometries and almost-MDS codes"};
  app.require_subcommand(1);

  // field
  auto* field_cmd = app.add_subcommand("field", "construct and describe GF(p^e)");
  FieldArgs field_args;
  add_field_options(field_cmd, field_args);
  std::string field_out;
  field_cmd->add_option("--out", field_out, "write the field description here");

  // geometry
  auto* geom_cmd = app.add_subcommand("geometry", "enumerate PG(k-1,q) and report its counts");
  FieldArgs geom_field;
  add_field_options(geom_cmd, geom_field);
  int geom_k = 3;
  std::string geom_out;
  geom_cmd->add_option("--k", geom_k, "ambient dimension parameter k (PG(k-1,q))")->required();
  geom_cmd->add_option("--out", geom_out, "write the geometry report here");

  // conic
  auto* conic_cmd = app.add_subcommand("conic", "the q+1 point conic in PG(2,q)");
  FieldArgs conic_field;
  add_field_options(conic_cmd, conic_field);
  std::string conic_out;
  conic_cmd->add_option("--out", conic_out, "write the arc file here");

  // denniston
  auto* den_cmd = app.add_subcommand("denniston", "maximal arc of 2-power degree in PG(2,2^h)");
  FieldArgs den_field;
  add_field_options(den_cmd, den_field);
  std::uint32_t den_degree = 4;
  std::string den_out;
  den_cmd->add_option("--degree", den_degree, "arc degree (power of 2 dividing q)")->required();
  den_cmd->add_option("--out", den_out, "write the arc file here");

  // delete
  auto* del_cmd = app.add_subcommand("delete", "remove points from an arc file");
  std::string del_arc, del_out;
  std::vector<PointIdx> del_indices;
  del_cmd->add_option("--arc", del_arc, "input arc file")->required();
  del_cmd->add_option("--indices", del_indices, "point indices to remove once each")->required();
  del_cmd->add_option("--out", del_out, "write the reduced arc here");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "verify an arc file and report diagnostics");
  std::string verify_arc_path;
  int verify_r = 0;
  verify_cmd->add_option("--arc", verify_arc_path, "arc file")->required();
  verify_cmd->add_option("--r", verify_r, "claimed r (default: observed maximum)");

  // profile
  auto* prof_cmd = app.add_subcommand("profile", "hyperplane census of an arc");
  std::string prof_arc, prof_out;
  int prof_workers = 1;
  prof_cmd->add_option("--arc", prof_arc, "arc file")->required();
  prof_cmd->add_option("--workers", prof_workers, "parallel census workers");
  prof_cmd->add_option("--out", prof_out, "write the census report here");

  // extend
  auto* ext_cmd = app.add_subcommand("extend", "extension candidates / unique extension");
  std::string ext_arc, ext_out, ext_method = "both";
  int ext_workers = 1;
  bool ext_pair_planes = false;
  ext_cmd->add_option("--arc", ext_arc, "arc file")->required();
  ext_cmd->add_option("--method", ext_method, "scan | constructive | both")
      ->check(CLI::IsMember({"scan", "constructive", "both"}));
  ext_cmd->add_option("--workers", ext_workers, "parallel verification workers");
  ext_cmd->add_flag("--pair-planes", ext_pair_planes, "also run the pair-plane diagnostic (k >= 5)");
  ext_cmd->add_option("--out", ext_out, "write the certificate here");

  // search
  auto* search_cmd = app.add_subcommand("search", "backtracking search for large arcs");
  FieldArgs search_field;
  add_field_options(search_cmd, search_field);
  int search_k = 3, search_r = 2, search_workers = 1;
  std::uint64_t search_target = 0, search_nodes = 0;
  double search_seconds = 0;
  bool search_prove = false;
  std::string search_out;
  search_cmd->add_option("--k", search_k, "ambient dimension parameter")->required();
  search_cmd->add_option("--r", search_r, "hyperplane intersection cap")->required();
  search_cmd->add_flag("--prove-max", search_prove, "exhaustive proof of the maximum");
  search_cmd->add_option("--target", search_target, "find mode: stop at this size");
  search_cmd->add_option("--workers", search_workers, "prove-max subtree workers");
  search_cmd->add_option("--budget-nodes", search_nodes, "node budget (0 = unlimited)");
  search_cmd->add_option("--budget-seconds", search_seconds, "wall-clock budget (0 = unlimited)");
  search_cmd->add_option("--out", search_out, "write the search report here");

  // code
  auto* code_cmd = app.add_subcommand("code", "linear-code parameters of an arc");
  std::string code_arc, code_out, code_out_arc;
  bool code_extend = false;
  code_cmd->add_option("--arc", code_arc, "arc file")->required();
  code_cmd->add_flag("--extend", code_extend, "uniquely extend to the length-maximal code");
  code_cmd->add_option("--out", code_out, "write the code report here");
  code_cmd->add_option("--out-arc", code_out_arc, "with --extend: write the extended arc here");

  // table
  auto* table_cmd = app.add_subcommand("table", "largest complete arc sizes with provenance");
  int table_k = 3, table_workers = 1;
  std::vector<std::uint32_t> table_q;
  std::vector<int> table_s;
  std::uint64_t table_prove = 2'000'000, table_find = 500'000;
  std::string table_format = "json", table_out;
  table_cmd->add_option("--k", table_k, "ambient dimension parameter");
  table_cmd->add_option("--q", table_q, "field orders (prime powers)")->required();
  table_cmd->add_option("--s", table_s, "defect parameters")->required();
  table_cmd->add_option("--prove-nodes", table_prove, "per-cell prove-max node budget (0 = skip)");
  table_cmd->add_option("--find-nodes", table_find, "per-cell witness-hunt node budget (0 = skip)");
  table_cmd->add_option("--workers", table_workers, "prove-max subtree workers");
  table_cmd->add_option("--format", table_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  table_cmd->add_option("--out", table_out, "write the table here");

  CLI11_PARSE(app, argc, argv);

  if (*field_cmd) {
    Field f = field_args.build();
    Json j = field_to_json(f);
    j["q"] = f.q();
    j["generator"] = f.generator();
    emit(j, field_out);
    std::cout << "GF(" << f.q() << ") ready; modulus encodes the smallest irreducible choice when omitted\n";
    return kExitOk;
  }

  if (*geom_cmd) {
    auto g = Geometry::build(geom_field.build(), geom_k);
    std::size_t per = g->hyperplane_size();
    std::uint64_t incidences = 0;
    for (PointIdx h = 0; h < g->num_hyperplanes(); ++h) incidences += g->hyperplane_row(h).count();
    bool double_count_ok = incidences == g->num_points() * per;
    Json geom_field_json = field_to_json(g->field());
    geom_field_json["k"] = g->k();
    Json j{{"geometry", std::move(geom_field_json)},
           {"points", g->num_points()},
           {"hyperplanes", g->num_hyperplanes()},
           {"points_per_hyperplane", per},
           {"incidences", incidences},
           {"double_counting_ok", double_count_ok}};
    emit(j, geom_out);
    std::cout << "PG(" << g->k() - 1 << "," << g->field().q() << "): " << g->num_points()
              << " points, " << per << " per hyperplane\n";
    return double_count_ok ? kExitOk : kExitVerification;
  }

  if (*conic_cmd) {
    auto g = Geometry::build(conic_field.build(), 3);
    auto arc = conic(g);
    emit(arc_to_json(arc), conic_out);
    std::cout << "conic with " << arc.n() << " points in PG(2," << g->field().q() << ")\n";
    return kExitOk;
  }

  if (*den_cmd) {
    auto g = Geometry::build(den_field.build(), 3);
    auto dn = denniston(g, den_degree);
    emit(arc_to_json(dn.arc), den_out);
    std::cout << "maximal arc: " << dn.arc.n() << " points, degree " << den_degree << ", b = "
              << dn.b << ", retries = " << dn.retries << "\n";
    return kExitOk;
  }

  if (*del_cmd) {
    auto arc = load_arc(del_arc);
    auto reduced = delete_points(arc, del_indices);
    emit(arc_to_json(reduced), del_out);
    std::cout << "removed " << del_indices.size() << " points; n = " << reduced.n() << "\n";
    return kExitOk;
  }

  if (*verify_cmd) {
    auto arc = load_arc(verify_arc_path);
    auto prof = profile(arc);
    int r = verify_r > 0 ? verify_r : prof.r;
    auto diag = verify_arc(arc, r);
    auto cap = flat_cap_check(arc);
    auto status = maximality_status(prof, arc.geometry());
    std::cout << "n = " << arc.n() << ", observed r = " << prof.r << ", s = " << prof.s << "\n";
    std::cout << "arc check at r = " << r << ": " << (diag.pass ? "pass" : "FAIL — " + diag.reason)
              << "\n";
    std::cout << "cap check: "
              << (!cap.applicable ? "not applicable" : (cap.violations.empty() ? "pass" : "FAIL"))
              << "\n";
    std::cout << "bound: n " << (status.status == Bound::Maximal ? "meets" : "is below") << " "
              << status.bound;
    if (status.status == Bound::BelowBound) std::cout << " (gap " << status.gap << ")";
    std::cout << "\n";
    return diag.pass && cap.pass() ? kExitOk : kExitVerification;
  }

  if (*prof_cmd) {
    auto arc = load_arc(prof_arc);
    auto prof = profile(arc, prof_workers);
    emit(profile_report_to_json(prof, arc.geometry()), prof_out);
    std::cout << "n = " << prof.n << ", r = " << prof.r << ", s = " << prof.s << "; "
              << prof.secants.size() << " secants, " << prof.tangents.size() << " tangents, "
              << prof.externals.size() << " externals\n";
    return kExitOk;
  }

  if (*ext_cmd) {
    auto arc = load_arc(ext_arc);
    std::optional<ExtensionCertificate> scan, constructive;
    if (ext_method == "scan" || ext_method == "both") scan = extension_candidates(arc);
    if (ext_method == "constructive" || ext_method == "both")
      constructive = extend_unique(arc, {ext_workers, ext_pair_planes});
    if (scan && constructive && scan->candidates != constructive->candidates)
      throw VerificationError("scan and constructive methods disagree on the candidate set");
    const ExtensionCertificate& main = constructive ? *constructive : *scan;
    Json j = certificate_to_json(main, arc);
    if (scan && constructive) {
      j["checks"].push_back(Json{{"name", "scan and constructive candidate sets agree"}, {"pass", true}});
    }
    emit(j, ext_out);
    std::cout << main.candidates.size() << " extension candidate(s)";
    if (main.unique) std::cout << " (unique)";
    std::cout << "\n";
    return kExitOk;
  }

  if (*search_cmd) {
    if (search_prove == (search_target > 0))
      throw InputError("choose exactly one of --prove-max and --target");
    auto g = Geometry::build(search_field.build(), search_k);
    SearchOptions so;
    so.mode = search_prove ? SearchMode::ProveMax : SearchMode::Find;
    so.target = search_target;
    so.workers = search_workers;
    so.max_nodes = search_nodes;
    so.budget_seconds = search_seconds;
    auto res = search_max_arc(g, search_r, so);
    emit(search_report_to_json(res, *g, search_r, search_prove ? "prove_max" : "find"), search_out);
    std::cout << "best_n = " << res.best_n;
    if (search_prove) std::cout << ", proved_max = " << (res.proved_max ? "true" : "false");
    if (res.target) std::cout << ", target " << (res.target_reached ? "reached" : "not reached");
    std::cout << ", nodes = " << res.nodes << "\n";
    return kExitOk;
  }

  if (*code_cmd) {
    auto arc = load_arc(code_arc);
    if (code_extend) {
      auto [grown, view] = extend_code(arc);
      emit(code_report_to_json(view), code_out);
      if (!code_out_arc.empty()) write_json_file(code_out_arc, arc_to_json(grown));
      std::cout << "[" << view.n << "," << view.k << "," << view.d << "]_"
                << arc.geometry().field().q() << ", defect " << view.defect
                << ", length-maximal\n";
    } else {
      auto view = to_code(arc);
      emit(code_report_to_json(view), code_out);
      std::cout << "[" << view.n << "," << view.k << "," << view.d << "]_"
                << arc.geometry().field().q() << ", d_dual = " << view.d_dual << ", defect = "
                << view.defect << (view.projective ? ", projective" : "")
                << (view.length_maximal ? ", length-maximal" : "") << "\n";
    }
    return kExitOk;
  }

  if (*table_cmd) {
    MTableOptions mo;
    mo.k = table_k;
    mo.qs = table_q;
    mo.ss = table_s;
    mo.prove_nodes = table_prove;
    mo.find_nodes = table_find;
    mo.workers = table_workers;
    auto cells = compute_mtable(mo);
    if (table_format == "csv") {
      std::string csv = mtable_to_csv(cells);
      if (table_out.empty())
        std::cout << csv;
      else {
        std::ofstream f(table_out, std::ios::binary);
        if (!f) throw InputError("cannot open for writing: " + table_out);
        f << csv;
      }
    } else {
      Json rows = Json::array();
      for (const auto& c : cells) {
        Json row{{"k", c.k},   {"q", c.q},     {"s", c.s},
                 {"upper", c.upper}, {"provenance", c.provenance}, {"citation", c.upper_citation}};
        if (c.exact) row["exact"] = *c.exact;
        if (c.witness_n) row["witness_n"] = *c.witness_n;
        if (c.cited_equality) row["cited_equality"] = *c.cited_equality;
        if (!c.footnotes.empty()) row["footnotes"] = c.footnotes;
        row["search_nodes"] = c.search_nodes;
        rows.push_back(std::move(row));
      }
      emit(rows, table_out);
    }
    std::cout << cells.size() << " table cells computed\n";
    return kExitOk;
  }

  return kExitBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const arcgeom::HypothesisViolation& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitHypotheses;
  } catch (const arcgeom::GuardExceeded& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitGuard;
  } catch (const arcgeom::VerificationError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitVerification;
  } catch (const arcgeom::InputError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitBadInput;
  }
}
