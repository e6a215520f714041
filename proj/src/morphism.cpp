#include "morifan/morphism.hpp"

#include <set>

#include "morifan/linalg.hpp"

namespace morifan {

PullbackMap PullbackMap::from_rows(std::vector<IntVec> rows, int source_rank) {
  PullbackMap f;
  f.source_rank = source_rank;
  f.target_rank = static_cast<int>(rows.size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != source_rank)
      throw Error(Errc::DimensionMismatch, "map rows must have length source_rank");
  f.rows = std::move(rows);
  if (f.source_rank > f.target_rank || rank_of_int(f.rows) != f.source_rank)
    throw Error(Errc::NonInjectiveBasis, "pullback matrix must have full column rank");
  return f;
}

PullbackMap PullbackMap::identity(int rank) {
  std::vector<IntVec> rows(rank, IntVec(rank, Int(0)));
  for (int i = 0; i < rank; ++i) rows[i][i] = 1;
  return from_rows(std::move(rows), rank);
}

std::vector<RatVec> PullbackMap::columns() const {
  std::vector<RatVec> cols(source_rank, RatVec(target_rank, Rat(0)));
  for (int r = 0; r < target_rank; ++r)
    for (int c = 0; c < source_rank; ++c) cols[c][r] = Rat(rows[r][c]);
  return cols;
}

DivisorClass pullback_class(const PullbackMap& f, const DivisorClass& d) {
  if (static_cast<int>(d.size()) != f.source_rank)
    throw Error(Errc::DimensionMismatch, "class length does not match source rank");
  DivisorClass out(f.target_rank, Rat(0));
  for (int r = 0; r < f.target_rank; ++r) out[r] = dot(f.rows[r], d);
  return out;
}

Fan restrict_fan(const Fan& fan, const PullbackMap& f) {
  if (fan.ambient_rank != f.target_rank)
    throw Error(Errc::DimensionMismatch, "fan rank does not match target rank");
  auto cols = f.columns();
  std::set<Cone> restricted;
  for (const auto& c : fan.cones) restricted.insert(restrict_cone(c, cols));
  return make_fan(f.source_rank, {restricted.begin(), restricted.end()});
}

RestrictionReport compare_fans(const Fan& expected, const Fan& actual) {
  RestrictionReport rep;
  rep.expected = expected;
  rep.actual = actual;
  std::set<Cone> exp(expected.cones.begin(), expected.cones.end());
  std::set<Cone> act(actual.cones.begin(), actual.cones.end());
  for (const auto& c : exp)
    if (!act.count(c)) rep.mismatches.emplace_back(c, "expected-only");
  for (const auto& c : act)
    if (!exp.count(c)) rep.mismatches.emplace_back(c, "actual-only");
  rep.pass = rep.mismatches.empty();
  return rep;
}

RestrictionReport verify_restriction(const WeightSystem& ws_x, const WeightSystem& ws_y,
                                     const PullbackMap& f) {
  if (f.target_rank != ws_x.rank() || f.source_rank != ws_y.rank())
    throw Error(Errc::DimensionMismatch, "pullback map ranks do not match the weight systems");

  RestrictionReport rep = compare_fans(git_fan(ws_y), restrict_fan(git_fan(ws_x), f));

  auto cols = f.columns();
  auto check = [&](const std::string& name, const Cone& y_side, const Cone& x_side) {
    ConeCheck c;
    c.name = name;
    c.expected = y_side;
    c.actual = restrict_cone(x_side, cols);
    c.pass = c.expected == c.actual;
    rep.cone_checks.push_back(std::move(c));
  };
  check("eff", effective_cone(ws_y), effective_cone(ws_x));
  check("mov", moving_cone(ws_y), moving_cone(ws_x));
  if (ws_x.ample() && ws_y.ample()) check("nef", nef_cone(ws_y), nef_cone(ws_x));

  for (const auto& c : rep.cone_checks) rep.pass = rep.pass && c.pass;
  return rep;
}

Fan restrict_region_fan(const WeightSystem& ws, const Cone& region, const PullbackMap* f) {
  if (region.ambient_rank() != ws.rank())
    throw Error(Errc::DimensionMismatch, "region rank does not match the weight system");
  Cone clipped = intersect_cones(region, effective_cone(ws));
  std::set<Cone> pieces;
  for (const auto& c : git_fan(ws).cones) pieces.insert(intersect_cones(c, clipped));
  Fan fan = make_fan(ws.rank(), {pieces.begin(), pieces.end()});
  if (f) fan = restrict_fan(fan, *f);
  return fan;
}

bool pullback_zariski_check(const WeightSystem& ws_x, const WeightSystem& ws_y,
                            const PullbackMap& f, const DivisorClass& d) {
  ZariskiDecomposition zy = zariski(ws_y, d);  // NotEffective propagates
  ZariskiDecomposition zx = zariski(ws_x, pullback_class(f, d));
  return pullback_class(f, zy.positive) == zx.positive &&
         pullback_class(f, zy.negative) == zx.negative;
}

}  // namespace morifan
