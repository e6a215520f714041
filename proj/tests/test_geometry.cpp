#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "morifan/fan.hpp"

using namespace morifan;

namespace {

IntVec iv(std::initializer_list<long long> xs) {
  IntVec v;
  for (auto x : xs) v.push_back(Int(x));
  return v;
}

RatVec rv(std::initializer_list<long long> xs) { return to_rat(iv(xs)); }

Cone cone2(std::initializer_list<std::initializer_list<long long>> gens) {
  std::vector<IntVec> v;
  for (auto g : gens) v.push_back(iv(g));
  return cone_from_generators(static_cast<int>(v.front().size()), v);
}

const Cone quadrant = cone2({{1, 0}, {0, 1}});
// Effective cone of the two-point blow-up of P^3 in basis (H, E1, E2).
const std::vector<IntVec> bl2p3_columns = {iv({1, -1, -1}), iv({1, -1, -1}), iv({1, -1, 0}),
                                           iv({1, 0, -1}),  iv({0, 1, 0}),   iv({0, 0, 1})};
const Cone eff_bl2p3 = cone_from_generators(3, bl2p3_columns);
const Cone sa_x = cone2({{1, 0, 0}, {1, -1, 0}, {1, 0, -1}});
const Cone sa_xp = cone2({{1, -1, 0}, {1, 0, -1}, {1, -1, -1}});

}  // namespace

TEST_CASE("cone_from_generators canonical form") {
  CHECK(quadrant.rays() == std::vector<IntVec>{iv({0, 1}), iv({1, 0})});
  CHECK(quadrant.facets() == std::vector<IntVec>{iv({0, 1}), iv({1, 0})});
  CHECK(quadrant.dim() == 2);

  CHECK(eff_bl2p3.rays() == std::vector<IntVec>{iv({0, 0, 1}), iv({0, 1, 0}), iv({1, -1, -1})});
  CHECK(eff_bl2p3.dim() == 3);

  // generators are deduplicated and scaled to primitive vectors
  Cone c = cone2({{2, 0}, {4, 0}, {0, 3}});
  CHECK(c == quadrant);

  // empty input gives the zero cone
  Cone z = cone_from_generators(2, std::vector<IntVec>{});
  CHECK(z.dim() == 0);
  CHECK(z.rays().empty());
}

TEST_CASE("non-pointed input is rejected with a lineality witness") {
  std::vector<IntVec> gens = {iv({1, 1}), iv({-1, -1}), iv({0, 1})};
  CHECK_THROWS_AS(cone_from_generators(2, gens), NonPointedError);
  try {
    cone_from_generators(2, gens);
  } catch (const NonPointedError& e) {
    CHECK(e.witness() == iv({1, 1}));
  }
}

TEST_CASE("dual cone") {
  CHECK(dual_cone(quadrant) == quadrant);
  CHECK(dual_cone(cone2({{1, 0}, {1, 1}})) == cone2({{0, 1}, {1, -1}}));
  CHECK(dual_cone(dual_cone(eff_bl2p3)) == eff_bl2p3);
  // duals of lower-dimensional cones contain lines
  CHECK_THROWS_AS(dual_cone(cone2({{1, 0, 0}})), NonPointedError);
}

TEST_CASE("locate") {
  CHECK(locate(eff_bl2p3, rv({1, 0, 0})).kind == Location::RelativeInterior);

  Location on_ray = locate(eff_bl2p3, rv({0, 1, 0}));
  REQUIRE(on_ray.kind == Location::OnFace);
  CHECK(*on_ray.face == cone2({{0, 1, 0}}));

  CHECK(locate(eff_bl2p3, rv({-1, 0, 0})).kind == Location::Outside);

  // the smallest face containing the origin is the zero cone
  Location at_zero = locate(quadrant, rv({0, 0}));
  REQUIRE(at_zero.kind == Location::OnFace);
  CHECK(at_zero.face->dim() == 0);

  // zero cone: only the origin belongs to it
  CHECK(locate(Cone::zero(2), rv({0, 0})).kind == Location::RelativeInterior);
  CHECK(locate(Cone::zero(2), rv({1, 0})).kind == Location::Outside);
}

TEST_CASE("intersect_cones") {
  CHECK(intersect_cones(eff_bl2p3, eff_bl2p3) == eff_bl2p3);
  CHECK(intersect_cones(quadrant, cone2({{1, 1}, {-1, 1}})) == cone2({{1, 1}, {0, 1}}));
  CHECK(intersect_cones(sa_x, sa_xp) == cone2({{1, -1, 0}, {1, 0, -1}}));
}

TEST_CASE("faces") {
  CHECK(faces(quadrant).size() == 4);
  CHECK(faces(eff_bl2p3).size() == 8);
  CHECK(faces(cone2({{1, 0}})).size() == 2);

  // the face lattice is closed under intersections
  auto fs = faces(eff_bl2p3);
  for (const auto& a : fs)
    for (const auto& b : fs) {
      Cone inter = intersect_cones(a, b);
      CHECK(std::find(fs.begin(), fs.end(), inter) != fs.end());
    }
}

TEST_CASE("restrict_cone") {
  CHECK(restrict_cone(sa_x, {rv({1, 0, 0}), rv({0, 1, 0})}) == cone2({{1, 0}, {1, -1}}));
  CHECK(restrict_cone(quadrant, {rv({1, 0})}) == cone_from_generators(1, {iv({1})}));
  CHECK(restrict_cone(sa_xp, {rv({1, 0, 0}), rv({0, 1, 1})}) == cone2({{2, -1}, {1, -1}}));
  CHECK_THROWS_AS(restrict_cone(sa_x, {rv({1, 0, 0}), rv({2, 0, 0})}), Error);
}

TEST_CASE("common refinement examples") {
  Fan trivial = common_refinement({quadrant}, quadrant);
  CHECK(trivial.maximal.size() == 1);
  CHECK(trivial.cones.size() == 4);

  Fan two = common_refinement({quadrant, cone2({{1, 1}, {0, 1}})}, quadrant);
  REQUIRE(two.maximal.size() == 2);
  std::vector<Cone> maxes;
  for (auto i : two.maximal) maxes.push_back(two.cones[i]);
  CHECK(std::find(maxes.begin(), maxes.end(), cone2({{1, 0}, {1, 1}})) != maxes.end());
  CHECK(std::find(maxes.begin(), maxes.end(), cone2({{1, 1}, {0, 1}})) != maxes.end());
  check_fan_axioms(two);

  // all state cones of the bl2p3 weight matrix refine Eff into 5 chambers
  std::vector<Cone> state_cones;
  int n = static_cast<int>(bl2p3_columns.size());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<IntVec> gens;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) gens.push_back(bl2p3_columns[i]);
    state_cones.push_back(cone_from_generators(3, gens));
  }
  Fan fan = common_refinement(state_cones, eff_bl2p3);
  CHECK(fan.maximal.size() == 5);
  check_fan_axioms(fan);
}

TEST_CASE("refinement support is covered by the maximal cones") {
  // the five chambers of the bl2p3 fan tile Eff; spurious pooled hyperplanes
  // (e.g. the one through H and H-E1-E2) must not split them
  std::vector<Cone> chambers = {sa_x, sa_xp, cone2({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
                                cone2({{0, 1, 0}, {1, 0, 0}, {1, 0, -1}}),
                                cone2({{0, 0, 1}, {1, 0, 0}, {1, -1, 0}})};
  Fan fan = common_refinement(chambers, eff_bl2p3);
  check_fan_axioms(fan);
  CHECK(fan.maximal.size() == 5);
  for (auto i : fan.maximal)
    CHECK(std::find(chambers.begin(), chambers.end(), fan.cones[i]) != chambers.end());

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    RatVec p(3, Rat(0));
    for (const auto& r : eff_bl2p3.rays()) p = add(p, scale(Rat(coeff(rng)), to_rat(r)));
    bool hit = false;
    for (auto i : fan.maximal)
      if (fan.cones[i].contains(p)) hit = true;
    CHECK(hit);
  }
}

TEST_CASE("round-trip and double-dual properties on random pointed cones") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> rank_dist(2, 4);
  std::uniform_int_distribution<int> count_dist(1, 8);

  int built = 0;
  while (built < 60) {
    int rank = rank_dist(rng);
    int count = count_dist(rng);
    std::vector<IntVec> gens;
    for (int i = 0; i < count; ++i) {
      IntVec g(rank);
      for (int r = 0; r < rank; ++r) g[r] = entry(rng);
      gens.push_back(std::move(g));
    }
    try {
      Cone c = cone_from_generators(rank, gens);
      ++built;
      CHECK(cone_from_generators(rank, c.rays()) == c);
      for (const auto& r : c.rays()) {
        Location loc = locate(c, to_rat(r));
        bool boundary_ok = loc.kind == Location::RelativeInterior || loc.kind == Location::OnFace;
        CHECK(boundary_ok);
      }
      if (c.dim() == rank && c.dim() > 0) CHECK(dual_cone(dual_cone(c)) == c);
      // membership trichotomy at the interior sample
      if (c.dim() > 0) CHECK(locate(c, c.interior_sample()).kind == Location::RelativeInterior);
    } catch (const NonPointedError&) {
      continue;  // resample
    }
  }
}

TEST_CASE("fan axioms hold for refinements of random cone families") {
  // Families whose membership classes close up to non-convex sets are
  // rejected loudly; everything else must come back as a genuine fan
  // supported on `within`.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> entry(0, 3);
  int produced = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Cone> cones{quadrant};
    for (int k = 0; k < 3; ++k) {
      std::vector<IntVec> gens;
      for (int i = 0; i < 3; ++i) {
        IntVec g{Int(entry(rng)), Int(entry(rng))};
        if (!is_zero(g)) gens.push_back(g);
      }
      if (gens.empty()) continue;
      cones.push_back(cone_from_generators(2, gens));  // inside the quadrant, always pointed
    }
    try {
      Fan fan = common_refinement(cones, quadrant);
      ++produced;
      check_fan_axioms(fan);
      std::vector<IntVec> rays;
      for (auto i : fan.maximal)
        for (const auto& r : fan.cones[i].rays()) rays.push_back(r);
      CHECK(cone_from_generators(2, rays) == quadrant);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::Validation);
    }
  }
  CHECK(produced >= 10);
}
