#include "morifan/divisor.hpp"

#include <algorithm>

#include "morifan/simplex.hpp"

namespace morifan {

namespace {

std::vector<IntVec> all_classes(const WeightSystem& ws) {
  std::vector<IntVec> v;
  v.reserve(ws.size());
  for (const auto& g : ws.generators()) v.push_back(g.cls);
  return v;
}

// Constraint matrix of sum_i u_i w_i = D over u >= 0.
RatMat fiber_matrix(const WeightSystem& ws) {
  RatMat A(ws.rank(), RatVec(ws.size(), Rat(0)));
  for (int i = 0; i < ws.size(); ++i)
    for (int r = 0; r < ws.rank(); ++r) A[r][i] = Rat(ws.cls(i)[r]);
  return A;
}

}  // namespace

Cone effective_cone(const WeightSystem& ws) { return cone_from_generators(ws.rank(), all_classes(ws)); }

Cone moving_cone(const WeightSystem& ws) {
  auto classes = all_classes(ws);
  Cone mov = effective_cone(ws);
  for (int i = 0; i < ws.size(); ++i) {
    std::vector<IntVec> others;
    for (int j = 0; j < ws.size(); ++j)
      if (j != i) others.push_back(classes[j]);
    mov = intersect_cones(mov, cone_from_generators(ws.rank(), others));
  }
  return mov;
}

const Cone& fan_cone_containing(const Fan& fan, const RatVec& x) {
  for (const auto& c : fan.cones)
    if (locate(c, x).kind == Location::RelativeInterior) return c;
  throw Error(Errc::NotEffective, "class lies outside the support of the fan");
}

Cone nef_cone(const WeightSystem& ws) {
  if (!ws.ample()) throw Error(Errc::Validation, "weight system carries no ample class");
  Fan fan = git_fan(ws);
  const Cone& c = fan_cone_containing(fan, to_rat(*ws.ample()));
  if (c.dim() != ws.rank())
    throw Error(Errc::Validation, "ample class does not lie in the interior of a chamber");
  return c;
}

std::uint64_t h0(const WeightSystem& ws, const DivisorClass& D, std::uint64_t ceiling) {
  if (static_cast<int>(D.size()) != ws.rank()) throw Error(Errc::DimensionMismatch, "divisor rank mismatch");
  IntVec target = to_int(D);  // throws NonIntegral

  int n = ws.size();
  Cone eff = effective_cone(ws);
  if (!eff.contains(target)) return 0;

  // phi is strictly positive on Eff minus the origin, bounding every
  // exponent: u_i <= (phi . residual) / (phi . w_i).
  IntVec phi(ws.rank(), Int(0));
  for (const auto& f : eff.facets())
    for (int r = 0; r < ws.rank(); ++r) phi[r] += f[r];

  std::vector<Cone> suffix(n + 1, Cone::zero(ws.rank()));
  for (int i = n - 1; i >= 0; --i) {
    std::vector<IntVec> tail;
    for (int j = i; j < n; ++j) tail.push_back(ws.cls(j));
    suffix[i] = cone_from_generators(ws.rank(), tail);
  }
  std::vector<Int> phi_w(n);
  for (int i = 0; i < n; ++i) phi_w[i] = dot(phi, ws.cls(i));

  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int i, const IntVec& r) -> void {
    if (i == n) {
      if (is_zero(r)) {
        if (++count > ceiling) throw Error(Errc::ResourceLimit, "section count exceeds ceiling");
      }
      return;
    }
    if (!suffix[i].contains(r)) return;
    Int ub = dot(phi, r) / phi_w[i];
    IntVec rem = r;
    for (Int t = 0; t <= ub; ++t) {
      self(self, i + 1, rem);
      for (int k = 0; k < ws.rank(); ++k) rem[k] -= ws.cls(i)[k];
    }
  };
  rec(rec, 0, target);
  return count;
}

namespace {

// The per-generator minima without the fan lookup.
std::pair<RatVec, bool> negative_coefficients(const WeightSystem& ws, const DivisorClass& D) {
  int n = ws.size();
  RatMat A = fiber_matrix(ws);
  RatVec a(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    RatVec c(n, Rat(0));
    c[i] = 1;
    LpResult lp = solve_lp(A, D, c);
    if (lp.status != LpStatus::Optimal) return {RatVec{}, false};
    a[i] = lp.objective;
  }
  return {a, true};
}

}  // namespace

ZariskiDecomposition zariski(const WeightSystem& ws, const DivisorClass& D) {
  if (static_cast<int>(D.size()) != ws.rank()) throw Error(Errc::DimensionMismatch, "divisor rank mismatch");
  auto [a, effective] = negative_coefficients(ws, D);
  if (!effective) throw Error(Errc::NotEffective, "class is not effective");

  ZariskiDecomposition zd;
  zd.negative_coefficients = a;
  zd.negative.assign(ws.rank(), Rat(0));
  for (int i = 0; i < ws.size(); ++i)
    zd.negative = add(zd.negative, scale(a[i], to_rat(ws.cls(i))));
  zd.positive = sub(D, zd.negative);
  zd.cone = fan_cone_containing(git_fan(ws), D);
  return zd;
}

ChamberInfo chamber_info(const WeightSystem& ws, const DivisorClass& D) {
  if (static_cast<int>(D.size()) != ws.rank()) throw Error(Errc::DimensionMismatch, "divisor rank mismatch");
  if (is_zero(D)) throw Error(Errc::ZeroClass, "the zero class has no chamber");
  Fan fan = git_fan(ws);
  const Cone& cone = fan_cone_containing(fan, D);  // NotEffective if outside

  ChamberInfo info;
  info.cone = cone;
  info.dim = cone.dim();
  info.kind = cone.dim() == ws.rank() ? ConeKind::Chamber : ConeKind::Cell;

  // The negative-part support is constant on the cone's relative interior,
  // so one sample point determines it.
  RatVec sample = cone.interior_sample();
  auto [a, ok] = negative_coefficients(ws, sample);
  if (!ok) throw Error(Errc::Validation, "interior sample of a fan cone must be effective");
  for (int i = 0; i < ws.size(); ++i)
    if (a[i] > 0) info.exceptional_indices.push_back(i);

  RatVec positive = sample;
  for (int i = 0; i < ws.size(); ++i) positive = sub(positive, scale(a[i], to_rat(ws.cls(i))));
  Location loc = locate(cone, positive);
  if (loc.kind == Location::RelativeInterior)
    info.positive_face = cone;
  else if (loc.kind == Location::OnFace)
    info.positive_face = *loc.face;
  else
    throw Error(Errc::Validation, "positive part escaped its chamber");
  return info;
}

bool strong_mori_equivalent(const WeightSystem& ws, const DivisorClass& a, const DivisorClass& b) {
  Fan fan = git_fan(ws);
  for (const auto* d : {&a, &b}) {
    if (static_cast<int>(d->size()) != ws.rank()) throw Error(Errc::DimensionMismatch, "divisor rank mismatch");
    if (is_zero(*d)) throw Error(Errc::ZeroClass, "the zero class has no chamber");
  }
  bool via_chambers = fan_cone_containing(fan, a) == fan_cone_containing(fan, b);
  bool via_signatures = signature(ws, a) == signature(ws, b);
  if (via_chambers != via_signatures)
    throw Error(Errc::Validation, "chamber route and GIT route disagree");
  return via_chambers;
}

}  // namespace morifan
