#pragma once

#include <string>

#include "json.hpp"
#include "morifan/morphism.hpp"

namespace morifan {

using Json = nlohmann::ordered_json;

// Weight-system file schema (bit-exact):
//   {"rank": int, "basis": [string], "generators": [{"name": string,
//    "class": [int]}], "ample": [int] optional}
// Map file schema: {"source_rank": int, "matrix": [[int]]} with matrix rows
// in target coordinates, columns the images of the source basis.
WeightSystem parse_weight_system(const Json& j);
WeightSystem parse_weight_system_text(const std::string& text);
Json weight_system_json(const WeightSystem& ws);

PullbackMap parse_pullback_map(const Json& j);
PullbackMap parse_pullback_map_text(const std::string& text);
Json pullback_map_json(const PullbackMap& f);

// Fan document: {"rays": [[int]], "cones": [{"rays": [int indices],
// "dim": int, "kind": "chamber"|"cell"|"origin"}]} with rays primitive and
// lex-sorted, cones sorted by (dim, ray indices).
Json fan_json(const Fan& fan);
Fan parse_fan(const Json& j, int ambient_rank);

Json cone_json(const Cone& c);
Json ratvec_json(const RatVec& v);  // canonical "p/q" strings
RatVec parse_ratvec(const Json& j);

Json zariski_json(const ZariskiDecomposition& zd, int ambient_rank);
Json chamber_json(const ChamberInfo& info, int ambient_rank);
Json signature_json(const Signature& sig, int ngens);
Json report_json(const RestrictionReport& rep);

std::string canonical_text(const Json& j);  // dump with 2-space indent + newline

std::string read_file(const std::string& path);    // Errc::Parse on failure
void write_file(const std::string& path, const std::string& text);

}  // namespace morifan
