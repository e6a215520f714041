#pragma once

#include <random>
#include <string>
#include <vector>

#include "morifan/divisor.hpp"
#include "morifan/fixtures.hpp"

namespace testutil {

inline morifan::IntVec iv(std::initializer_list<long long> xs) {
  morifan::IntVec v;
  for (auto x : xs) v.push_back(morifan::Int(x));
  return v;
}

inline morifan::RatVec rv(std::initializer_list<long long> xs) { return morifan::to_rat(iv(xs)); }

inline morifan::Cone mk_cone(std::initializer_list<std::initializer_list<long long>> gens) {
  std::vector<morifan::IntVec> v;
  for (auto g : gens) v.push_back(iv(g));
  return morifan::cone_from_generators(static_cast<int>(v.begin()->size()), v);
}

// Random pointed full-dimensional weight system, rho <= 3, n <= 7, entries in
// [-3, 3]; resamples until the validation passes.
inline morifan::WeightSystem random_weight_system(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rho_d(1, 3), extra_d(1, 4), entry(-3, 3);
  for (;;) {
    int rho = rho_d(rng);
    int n = rho + extra_d(rng);
    std::vector<morifan::Generator> gens;
    for (int i = 0; i < n; ++i) {
      morifan::IntVec c(rho);
      for (auto& x : c) x = entry(rng);
      gens.push_back({"g" + std::to_string(i), c});
    }
    try {
      return morifan::WeightSystem(rho, std::move(gens));
    } catch (const morifan::Error&) {
    }
  }
}

inline morifan::RatVec random_character(std::mt19937_64& rng, int rho) {
  std::uniform_int_distribution<int> entry(-5, 5);
  morifan::RatVec chi(rho);
  for (auto& x : chi) x = morifan::Rat(entry(rng));
  return chi;
}

// Random strictly positive rational combination of the cone's rays.
inline morifan::RatVec random_interior_point(std::mt19937_64& rng, const morifan::Cone& c) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 4);
  morifan::RatVec p(c.ambient_rank(), morifan::Rat(0));
  for (const auto& r : c.rays())
    p = morifan::add(p, morifan::scale(morifan::Rat(num(rng), den(rng)), morifan::to_rat(r)));
  return p;
}

// Independent oracle: the GIT class closure of x as the intersection of all
// 2^n state cones containing x, clipped to Eff.
inline morifan::Cone chamber_oracle(const morifan::WeightSystem& ws, const morifan::RatVec& x) {
  morifan::Cone result = morifan::effective_cone(ws);
  int n = ws.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    morifan::Cone d = morifan::state_cone(ws, morifan::SupportSet::from_mask(mask, n));
    if (d.contains(x)) result = morifan::intersect_cones(result, d);
  }
  return result;
}

// Full 2^n sweep refinement (the cross-check oracle for git_fan).
inline morifan::Fan git_fan_oracle(const morifan::WeightSystem& ws) {
  std::vector<morifan::Cone> cones;
  int n = ws.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask)
    cones.push_back(morifan::state_cone(ws, morifan::SupportSet::from_mask(mask, n)));
  return morifan::common_refinement(cones, morifan::effective_cone(ws));
}

}  // namespace testutil
