#pragma once

#include <string>

#include <json.hpp>

#include "arcgeom/arc.hpp"
#include "arcgeom/code.hpp"
#include "arcgeom/extension.hpp"
#include "arcgeom/search.hpp"

namespace arcgeom {

using Json = nlohmann::ordered_json;

// Arc interchange format:
//   { field: {p, e, modulus: [c0..ce]}, k, points: [[codes]...],
//     multiplicities: [m...]  (omitted when every multiplicity is 1) }
// Points are serialized as normalized representatives in canonical order,
// so equal multisets serialize to identical bytes.  The loader re-normalizes
// incoming points; duplicates are an error unless multiplicities are given
// explicitly, in which case duplicates merge by summing.
Json arc_to_json(const ArcMultiset& arc);
ArcMultiset arc_from_json(const Json& j);

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

/// Certificate format: { method, candidates: [[coords]...], unique,
/// common_point?, tangent_lines?, checks: [{name, pass, witness?}...] }.
/// Self-contained: an independent checker can replay it from the arc file.
Json certificate_to_json(const ExtensionCertificate& cert, const ArcMultiset& arc);

Json search_report_to_json(const SearchResult& res, const Geometry& g, int r,
                           const std::string& mode);

Json code_report_to_json(const LinearCodeView& view);

Json profile_report_to_json(const ArcProfile& prof, const Geometry& g);

/// Canonical serialization: two-space indentation plus a trailing newline.
std::string dump_canonical(const Json& j);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace arcgeom
