#include "arcgeom/io.hpp"

#include <fstream>

#include "arcgeom/errors.hpp"

namespace arcgeom {

Json field_to_json(const Field& f) {
  return Json{{"p", f.p()}, {"e", f.e()}, {"modulus", f.modulus()}};
}

Field field_from_json(const Json& j) {
  try {
    std::uint32_t p = j.at("p").get<std::uint32_t>();
    std::uint32_t e = j.at("e").get<std::uint32_t>();
    if (j.contains("modulus"))
      return Field::make(p, e, j.at("modulus").get<std::vector<std::uint32_t>>());
    return Field::make(p, e);
  } catch (const Json::exception& ex) {
    throw InputError(std::string("bad field description: ") + ex.what());
  }
}

Json arc_to_json(const ArcMultiset& arc) {
  const Geometry& g = arc.geometry();
  Json points = Json::array();
  Json mults = Json::array();
  bool plain_set = true;
  for (PointIdx p : arc.support()) {
    auto span = g.point(p);
    points.push_back(std::vector<int>(span.begin(), span.end()));
    mults.push_back(arc.multiplicity(p));
    if (arc.multiplicity(p) != 1) plain_set = false;
  }
  Json j{{"field", field_to_json(g.field())}, {"k", g.k()}, {"points", std::move(points)}};
  if (!plain_set) j["multiplicities"] = std::move(mults);
  return j;
}

ArcMultiset arc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field")) throw InputError("arc file lacks a field description");
  Field f = field_from_json(j.at("field"));
  int k;
  std::vector<std::vector<std::uint32_t>> raw_points;
  std::vector<std::uint32_t> mults;
  try {
    k = j.at("k").get<int>();
    raw_points = j.at("points").get<std::vector<std::vector<std::uint32_t>>>();
    if (j.contains("multiplicities")) mults = j.at("multiplicities").get<std::vector<std::uint32_t>>();
  } catch (const Json::exception& ex) {
    throw InputError(std::string("bad arc file: ") + ex.what());
  }
  const bool explicit_mults = !mults.empty();
  if (explicit_mults && mults.size() != raw_points.size())
    throw InputError("multiplicities length does not match points");

  auto g = Geometry::build(std::move(f), k);
  std::vector<std::uint32_t> mult(g->num_points(), 0);
  for (std::size_t i = 0; i < raw_points.size(); ++i) {
    Vec v;
    for (auto c : raw_points[i]) {
      if (c >= g->field().q()) throw InputError("point coordinate outside the field");
      v.push_back(static_cast<felt>(c));
    }
    if (static_cast<int>(v.size()) != k) throw InputError("point has wrong coordinate count");
    auto idx = g->index_of(std::move(v));  // re-normalizes
    if (!idx) throw InputError("the zero vector is not a projective point");
    std::uint32_t m = explicit_mults ? mults[i] : 1;
    if (!explicit_mults && mult[*idx])
      throw InputError("duplicate point at entry " + std::to_string(i) +
                       "; supply multiplicities to build a multiset");
    mult[*idx] += m;
  }
  return ArcMultiset::from_multiplicities(std::move(g), std::move(mult));
}

namespace {

Json coords_of(const Geometry& g, PointIdx p) {
  auto span = g.point(p);
  return Json(std::vector<int>(span.begin(), span.end()));
}

Json flat_to_json(const Geometry& g, const Flat& flat) {
  Json rows = Json::array();
  for (const auto& row : flat.basis) rows.push_back(std::vector<int>(row.begin(), row.end()));
  (void)g;
  return rows;
}

}  // namespace

Json certificate_to_json(const ExtensionCertificate& cert, const ArcMultiset& arc) {
  const Geometry& g = arc.geometry();
  Json candidates = Json::array();
  for (PointIdx p : cert.candidates) candidates.push_back(coords_of(g, p));
  Json checks = Json::array();
  for (const auto& c : cert.checks) {
    Json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) entry["witness"] = c.detail;
    if (!c.gating) entry["informational"] = true;
    checks.push_back(std::move(entry));
  }
  Json j{{"method", cert.method == ExtendMethod::Scan ? "scan" : "constructive"},
         {"candidates", std::move(candidates)},
         {"unique", cert.unique}};
  if (cert.common_point) j["common_point"] = coords_of(g, *cert.common_point);
  if (!cert.tangent_lines.empty()) {
    Json lines = Json::array();
    for (const auto& [p, line] : cert.tangent_lines)
      lines.push_back(Json{{"at", coords_of(g, p)}, {"line", flat_to_json(g, line)}});
    j["tangent_lines"] = std::move(lines);
  }
  j["checks"] = std::move(checks);
  return j;
}

Json search_report_to_json(const SearchResult& res, const Geometry& g, int r,
                           const std::string& mode) {
  Json geom = field_to_json(g.field());
  geom["k"] = g.k();
  Json j{{"geometry", std::move(geom)},
         {"r", r},
         {"mode", mode},
         {"best_n", res.best_n},
         {"proved_max", res.proved_max},
         {"nodes", res.nodes},
         {"seconds", res.seconds}};
  if (res.target) {
    j["target"] = *res.target;
    j["target_reached"] = res.target_reached;
  }
  j["budget_exhausted"] = res.budget_exhausted;
  j["pruning_rules"] = res.pruning_rules;
  if (!res.notes.empty()) j["notes"] = res.notes;
  if (res.best_arc) j["witness"] = arc_to_json(*res.best_arc);
  return j;
}

Json code_report_to_json(const LinearCodeView& view) {
  std::vector<int> gen;
  gen.reserve(view.n * view.k);
  for (int i = 0; i < view.k; ++i)
    for (std::size_t jcol = 0; jcol < view.n; ++jcol) gen.push_back(view.generator[i][jcol]);
  return Json{{"n", view.n},
              {"k", view.k},
              {"d", view.d},
              {"d_dual", view.d_dual},
              {"defect", view.defect},
              {"projective", view.projective},
              {"length_maximal", view.length_maximal},
              {"generator", std::move(gen)}};
}

Json profile_report_to_json(const ArcProfile& prof, const Geometry& g) {
  Json histogram = Json::object();
  for (auto [count, lines] : prof.histogram) histogram[std::to_string(count)] = lines;
  return Json{{"n", prof.n},
              {"r", prof.r},
              {"s", prof.s},
              {"k", g.k()},
              {"q", g.field().q()},
              {"histogram", std::move(histogram)},
              {"secants", prof.secants.size()},
              {"tangents", prof.tangents.size()},
              {"externals", prof.externals.size()},
              {"secant_hyperplanes", prof.secants},
              {"tangent_hyperplanes", prof.tangents},
              // Convention: a tangent is any hyperplane meeting the arc in
              // 1..r-1 points, not necessarily exactly one.
              {"tangent_convention", "hyperplane meeting the arc in between 1 and r-1 points"}};
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open for writing: " + path);
  out << dump_canonical(j);
  if (!out) throw InputError("write failed: " + path);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open: " + path);
  try {
    Json j;
    in >> j;
    return j;
  } catch (const Json::exception& ex) {
    throw InputError("invalid JSON in " + path + ": " + ex.what());
  }
}

}  // namespace arcgeom
