#include "morifan/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace morifan {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::Parse, what); }

long long checked_ll(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi) throw Error(Errc::Validation, "integer too large for JSON output");
  return v.convert_to<long long>();
}

Json intvec_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(checked_ll(x));
  return a;
}

IntVec parse_intvec(const Json& j, int expect_len, const std::string& what) {
  if (!j.is_array() || (expect_len >= 0 && static_cast<int>(j.size()) != expect_len))
    parse_fail(what + " must be an array" + (expect_len >= 0 ? " of length " + std::to_string(expect_len) : ""));
  IntVec v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) parse_fail(what + " entries must be integers");
    v.push_back(Int(e.get<long long>()));
  }
  return v;
}

void require_keys(const Json& j, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const std::string& what) {
  if (!j.is_object()) parse_fail(what + " must be a JSON object");
  for (const auto& k : required)
    if (!j.contains(k)) parse_fail(what + " is missing key '" + k + "'");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!required.count(it.key()) && !optional.count(it.key()))
      parse_fail(what + " has unknown key '" + it.key() + "'");
}

ConeKind kind_by_dim(int dim, int ambient) {
  if (dim == 0) return ConeKind::Origin;
  return dim == ambient ? ConeKind::Chamber : ConeKind::Cell;
}

}  // namespace

WeightSystem parse_weight_system(const Json& j) {
  require_keys(j, {"rank", "basis", "generators"}, {"ample"}, "weight system");
  if (!j["rank"].is_number_integer()) parse_fail("rank must be an integer");
  int rank = j["rank"].get<int>();
  if (rank < 1) parse_fail("rank must be positive");

  std::vector<std::string> basis;
  if (!j["basis"].is_array() || static_cast<int>(j["basis"].size()) != rank)
    parse_fail("basis must be an array of length rank");
  for (const auto& b : j["basis"]) {
    if (!b.is_string()) parse_fail("basis entries must be strings");
    basis.push_back(b.get<std::string>());
  }

  std::vector<Generator> gens;
  if (!j["generators"].is_array() || j["generators"].empty())
    parse_fail("generators must be a non-empty array");
  for (const auto& g : j["generators"]) {
    require_keys(g, {"name", "class"}, {}, "generator");
    if (!g["name"].is_string()) parse_fail("generator name must be a string");
    gens.push_back({g["name"].get<std::string>(), parse_intvec(g["class"], rank, "generator class")});
  }

  std::optional<IntVec> ample;
  if (j.contains("ample")) ample = parse_intvec(j["ample"], rank, "ample");
  return WeightSystem(rank, std::move(gens), std::move(basis), std::move(ample));
}

WeightSystem parse_weight_system_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) parse_fail("invalid JSON");
  return parse_weight_system(j);
}

Json weight_system_json(const WeightSystem& ws) {
  Json j;
  j["rank"] = ws.rank();
  Json basis = Json::array();
  for (const auto& b : ws.basis_names()) basis.push_back(b);
  j["basis"] = std::move(basis);
  Json gens = Json::array();
  for (const auto& g : ws.generators()) {
    Json e;
    e["name"] = g.name;
    e["class"] = intvec_json(g.cls);
    gens.push_back(std::move(e));
  }
  j["generators"] = std::move(gens);
  if (ws.ample()) j["ample"] = intvec_json(*ws.ample());
  return j;
}

PullbackMap parse_pullback_map(const Json& j) {
  require_keys(j, {"source_rank", "matrix"}, {}, "pullback map");
  if (!j["source_rank"].is_number_integer()) parse_fail("source_rank must be an integer");
  int source = j["source_rank"].get<int>();
  if (source < 1) parse_fail("source_rank must be positive");
  if (!j["matrix"].is_array() || j["matrix"].empty()) parse_fail("matrix must be a non-empty array of rows");
  std::vector<IntVec> rows;
  for (const auto& r : j["matrix"]) rows.push_back(parse_intvec(r, source, "matrix row"));
  return PullbackMap::from_rows(std::move(rows), source);
}

PullbackMap parse_pullback_map_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) parse_fail("invalid JSON");
  return parse_pullback_map(j);
}

Json pullback_map_json(const PullbackMap& f) {
  Json j;
  j["source_rank"] = f.source_rank;
  Json m = Json::array();
  for (const auto& r : f.rows) m.push_back(intvec_json(r));
  j["matrix"] = std::move(m);
  return j;
}

Json fan_json(const Fan& fan) {
  std::set<IntVec> ray_set;
  for (const auto& c : fan.cones)
    for (const auto& r : c.rays()) ray_set.insert(r);
  std::vector<IntVec> rays(ray_set.begin(), ray_set.end());  // lex-sorted

  auto index_of = [&](const IntVec& r) {
    return static_cast<int>(std::lower_bound(rays.begin(), rays.end(), r) - rays.begin());
  };

  struct Entry {
    int dim;
    std::vector<int> idx;
    ConeKind kind;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    Entry e;
    e.dim = fan.cones[i].dim();
    for (const auto& r : fan.cones[i].rays()) e.idx.push_back(index_of(r));
    std::sort(e.idx.begin(), e.idx.end());
    e.kind = fan.kinds[i];
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.dim != b.dim ? a.dim < b.dim : a.idx < b.idx; });

  Json j;
  Json jr = Json::array();
  for (const auto& r : rays) jr.push_back(intvec_json(r));
  j["rays"] = std::move(jr);
  Json jc = Json::array();
  for (const auto& e : entries) {
    Json c;
    c["rays"] = e.idx;
    c["dim"] = e.dim;
    c["kind"] = kind_name(e.kind);
    jc.push_back(std::move(c));
  }
  j["cones"] = std::move(jc);
  return j;
}

Fan parse_fan(const Json& j, int ambient_rank) {
  require_keys(j, {"rays", "cones"}, {}, "fan");
  std::vector<IntVec> rays;
  for (const auto& r : j["rays"]) rays.push_back(parse_intvec(r, ambient_rank, "fan ray"));
  std::vector<Cone> cones;
  for (const auto& c : j["cones"]) {
    require_keys(c, {"rays", "dim", "kind"}, {}, "fan cone");
    std::vector<IntVec> gens;
    for (const auto& ix : c["rays"]) {
      if (!ix.is_number_integer()) parse_fail("cone ray indices must be integers");
      int i = ix.get<int>();
      if (i < 0 || i >= static_cast<int>(rays.size())) parse_fail("cone ray index out of range");
      gens.push_back(rays[i]);
    }
    cones.push_back(cone_from_generators(ambient_rank, gens));
  }
  return make_fan(ambient_rank, cones);
}

Json cone_json(const Cone& c) {
  Json j;
  Json jr = Json::array();
  for (const auto& r : c.rays()) jr.push_back(intvec_json(r));
  j["rays"] = std::move(jr);
  j["dim"] = c.dim();
  return j;
}

Json ratvec_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

RatVec parse_ratvec(const Json& j) {
  if (!j.is_array()) parse_fail("expected an array of rationals");
  RatVec v;
  for (const auto& e : j) {
    if (!e.is_string()) parse_fail("rationals are encoded as 'p/q' strings");
    v.push_back(parse_rat(e.get<std::string>()));
  }
  return v;
}

Json zariski_json(const ZariskiDecomposition& zd, int ambient_rank) {
  Json j;
  j["positive"] = ratvec_json(zd.positive);
  j["negative"] = ratvec_json(zd.negative);
  j["coefficients"] = ratvec_json(zd.negative_coefficients);
  j["cone"] = cone_json(zd.cone);
  j["kind"] = kind_name(kind_by_dim(zd.cone.dim(), ambient_rank));
  return j;
}

Json chamber_json(const ChamberInfo& info, int ambient_rank) {
  Json j;
  j["cone"] = cone_json(info.cone);
  j["dim"] = info.dim;
  j["kind"] = kind_name(kind_by_dim(info.dim, ambient_rank));
  j["positive_face"] = cone_json(info.positive_face);
  j["exceptional_indices"] = info.exceptional_indices;
  return j;
}

Json signature_json(const Signature& sig, int ngens) {
  auto masks_json = [&](const std::vector<std::uint32_t>& masks) {
    Json a = Json::array();
    for (auto m : masks) {
      Json s = Json::array();
      for (int i = 0; i < ngens; ++i)
        if (m & (1u << i)) s.push_back(i);
      a.push_back(std::move(s));
    }
    return a;
  };
  Json j;
  j["semistable"] = masks_json(sig.semistable);
  j["stable"] = masks_json(sig.stable);
  return j;
}

Json report_json(const RestrictionReport& rep) {
  Json j;
  j["verdict"] = rep.pass ? "PASS" : "FAIL";
  j["expected"] = fan_json(rep.expected);
  j["actual"] = fan_json(rep.actual);
  Json mm = Json::array();
  for (const auto& [cone, side] : rep.mismatches) {
    Json e;
    e["side"] = side;
    e["cone"] = cone_json(cone);
    mm.push_back(std::move(e));
  }
  j["mismatches"] = std::move(mm);
  Json cc = Json::array();
  for (const auto& c : rep.cone_checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["expected"] = cone_json(c.expected);
    e["actual"] = cone_json(c.actual);
    cc.push_back(std::move(e));
  }
  j["cone_checks"] = std::move(cc);
  return j;
}

std::string canonical_text(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Validation, "cannot write file '" + path + "'");
  out << text;
}

}  // namespace morifan
