#include "morifan/weight_system.hpp"

#include <map>
#include <mutex>
#include <set>

#include "morifan/linalg.hpp"
#include "morifan/simplex.hpp"

namespace morifan {

WeightSystem::WeightSystem(int rank, std::vector<Generator> generators,
                           std::vector<std::string> basis_names, std::optional<IntVec> ample)
    : rank_(rank),
      generators_(std::move(generators)),
      basis_names_(std::move(basis_names)),
      ample_(std::move(ample)) {
  if (rank_ < 1) throw Error(Errc::Validation, "rank must be at least 1");
  std::vector<IntVec> classes;
  for (const auto& g : generators_) {
    if (static_cast<int>(g.cls.size()) != rank_)
      throw Error(Errc::Validation, "generator '" + g.name + "' has wrong class length");
    if (is_zero(g.cls)) throw Error(Errc::Validation, "generator '" + g.name + "' has zero class");
    classes.push_back(g.cls);
  }
  if (rank_of_int(classes) != rank_)
    throw Error(Errc::Validation, "generator classes do not span the full class space");
  Cone eff = cone_from_generators(rank_, classes);  // throws NonPointedError if not pointed
  if (eff.dim() != rank_) throw Error(Errc::Validation, "effective cone is not full-dimensional");
  if (ample_ && static_cast<int>(ample_->size()) != rank_)
    throw Error(Errc::Validation, "ample class has wrong length");
}

SupportSet SupportSet::full(int n) {
  SupportSet s;
  for (int i = 0; i < n; ++i) s.indices.push_back(i);
  return s;
}

SupportSet SupportSet::from_mask(std::uint32_t mask, int n) {
  SupportSet s;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) s.indices.push_back(i);
  return s;
}

std::uint32_t SupportSet::mask() const {
  std::uint32_t m = 0;
  for (int i : indices) m |= 1u << i;
  return m;
}

Cone state_cone(const WeightSystem& ws, const SupportSet& s) {
  std::vector<IntVec> gens;
  for (int i : s.indices) {
    if (i < 0 || i >= ws.size()) throw Error(Errc::Validation, "support index out of range");
    gens.push_back(ws.cls(i));
  }
  return cone_from_generators(ws.rank(), gens);
}

std::string stability_name(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::StrictlySemistable: return "strictly-semistable";
    case Stability::Unstable: return "unstable";
  }
  return "?";
}

Stability semistability(const WeightSystem& ws, const SupportSet& s, const RatVec& chi) {
  Cone d = state_cone(ws, s);
  Location loc = locate(d, chi);
  if (loc.kind == Location::Outside) return Stability::Unstable;
  if (loc.kind == Location::RelativeInterior && d.dim() == ws.rank()) return Stability::Stable;
  return Stability::StrictlySemistable;
}

Stability semistability_via_1ps(const WeightSystem& ws, const SupportSet& s, const RatVec& chi) {
  int rho = ws.rank();
  RatMat rows_ge;
  for (int i : s.indices) rows_ge.push_back(to_rat(ws.cls(i)));
  RatVec rhs_ge(rows_ge.size(), Rat(0));

  // Destabilizing 1-PS: nonnegative on the supported classes, <= -1 on chi
  // (scaling makes "< 0" and "<= -1" interchangeable).
  {
    RatMat ge = rows_ge;
    RatVec rhs = rhs_ge;
    RatVec neg_chi(rho);
    for (int j = 0; j < rho; ++j) neg_chi[j] = -chi[j];
    ge.push_back(neg_chi);
    rhs.push_back(Rat(1));
    if (solve_free_system(ge, rhs, {}, {}, rho).feasible) return Stability::Unstable;
  }

  // Stable iff no nonzero admissible 1-PS pairs to <= 0 with chi. A nonzero
  // lambda can be scaled to have some coordinate equal to +-1.
  RatMat ge = rows_ge;
  RatVec rhs = rhs_ge;
  RatVec neg_chi(rho);
  for (int j = 0; j < rho; ++j) neg_chi[j] = -chi[j];
  ge.push_back(neg_chi);
  rhs.push_back(Rat(0));
  for (int j = 0; j < rho; ++j) {
    for (int sign : {1, -1}) {
      RatMat eq(1, RatVec(rho, Rat(0)));
      eq[0][j] = 1;
      RatVec eq_rhs{Rat(sign)};
      if (solve_free_system(ge, rhs, eq, eq_rhs, rho).feasible) return Stability::StrictlySemistable;
    }
  }
  return Stability::Stable;
}

namespace {

std::vector<IntVec> weight_key(const WeightSystem& ws) {
  std::vector<IntVec> key;
  key.push_back(IntVec{Int(ws.rank())});
  for (const auto& g : ws.generators()) key.push_back(g.cls);
  return key;
}

}  // namespace

Fan git_fan(const WeightSystem& ws) {
  static std::mutex cache_mutex;
  static std::map<std::vector<IntVec>, Fan> cache;
  auto key = weight_key(ws);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  // State cones over supports of size <= rank suffice: by Caratheodory they
  // pool the same extremal rays, hence the same walls, as the full 2^n sweep.
  int n = ws.size();
  int rho = ws.rank();
  std::set<Cone> state_cones;
  auto add = [&](const std::vector<int>& idx) {
    SupportSet s;
    s.indices = idx;
    state_cones.insert(state_cone(ws, s));
  };
  // enumerate subsets of size 1..rho
  std::vector<int> idx;
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (!idx.empty()) add(idx);
    if (left == 0) return;
    for (int i = start; i < n; ++i) {
      idx.push_back(i);
      self(self, i + 1, left - 1);
      idx.pop_back();
    }
  };
  rec(rec, 0, std::min(n, rho));

  std::vector<IntVec> classes;
  for (const auto& g : ws.generators()) classes.push_back(g.cls);
  Cone eff = cone_from_generators(rho, classes);

  Fan fan = common_refinement({state_cones.begin(), state_cones.end()}, eff);

  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::move(key), fan);
  return fan;
}

Signature signature(const WeightSystem& ws, const RatVec& chi) {
  int n = ws.size();
  if (n > 20) throw Error(Errc::ResourceLimit, "signature sweep over 2^" + std::to_string(n) + " supports refused");
  if (static_cast<int>(chi.size()) != ws.rank()) throw Error(Errc::DimensionMismatch, "character rank mismatch");

  // Many supports share a state cone; cache by the set of distinct primitive
  // class directions.
  std::map<std::vector<IntVec>, Stability> status_cache;
  Signature sig;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::set<IntVec> dirs;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) dirs.insert(primitive(ws.cls(i)));
    std::vector<IntVec> key(dirs.begin(), dirs.end());
    auto it = status_cache.find(key);
    if (it == status_cache.end()) {
      Stability st = semistability(ws, SupportSet::from_mask(mask, n), chi);
      it = status_cache.emplace(std::move(key), st).first;
    }
    if (it->second != Stability::Unstable) sig.semistable.push_back(mask);
    if (it->second == Stability::Stable) sig.stable.push_back(mask);
  }
  return sig;
}

}  // namespace morifan
