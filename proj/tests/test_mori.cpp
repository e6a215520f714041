#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"

using namespace morifan;
using namespace testutil;

namespace {

const WeightSystem& bl2p3() { return fixture("bl2p3"); }

// Independent section-count oracle: plain box enumeration, no pruning. Bound
// each exponent through a covector that is strictly positive on Eff.
std::uint64_t h0_box_oracle(const WeightSystem& ws, const IntVec& target) {
  Cone eff = effective_cone(ws);
  if (!eff.contains(target)) return 0;
  IntVec phi(ws.rank(), Int(0));
  for (const auto& f : eff.facets())
    for (int r = 0; r < ws.rank(); ++r) phi[r] += f[r];
  Int budget = dot(phi, target);
  std::vector<long long> bound(ws.size());
  for (int i = 0; i < ws.size(); ++i)
    bound[i] = (budget / dot(phi, ws.cls(i))).convert_to<long long>();

  std::uint64_t count = 0;
  std::vector<long long> u(ws.size(), 0);
  for (;;) {
    IntVec sum(ws.rank(), Int(0));
    for (int i = 0; i < ws.size(); ++i)
      for (int r = 0; r < ws.rank(); ++r) sum[r] += Int(u[i]) * ws.cls(i)[r];
    if (sum == target) ++count;
    int i = 0;
    while (i < ws.size() && u[i] == bound[i]) u[i++] = 0;
    if (i == ws.size()) break;
    ++u[i];
  }
  return count;
}

Int least_integral_multiple(const RatVec& v) {
  Int m = 1;
  for (const auto& q : v) m = lcm(m, denominator(q));
  return m;
}

}  // namespace

TEST_CASE("effective cone") {
  CHECK(effective_cone(fixture("p2")) == cone_from_generators(1, {iv({1})}));
  CHECK(effective_cone(bl2p3()) == mk_cone({{0, 1, 0}, {0, 0, 1}, {1, -1, -1}}));
  CHECK(effective_cone(fixture("f1")) == mk_cone({{0, 1}, {1, -1}}));
}

TEST_CASE("moving cone") {
  CHECK(moving_cone(fixture("p2")) == cone_from_generators(1, {iv({1})}));
  CHECK(moving_cone(fixture("f1")) == mk_cone({{1, 0}, {1, -1}}));

  // Mov(bl2p3) is the union of the two semi-ample cones; as a convex cone it
  // is spanned by H, H-E1, H-E2 and H-E1-E2 (H is a fourth extremal ray).
  Cone mov = moving_cone(bl2p3());
  Cone sa_x = mk_cone({{1, 0, 0}, {1, -1, 0}, {1, 0, -1}});
  Cone sa_xp = mk_cone({{1, -1, 0}, {1, 0, -1}, {1, -1, -1}});
  CHECK(mov == mk_cone({{1, 0, 0}, {1, -1, 0}, {1, 0, -1}, {1, -1, -1}}));
  CHECK(mov.rays().size() == 4);
  CHECK(mov.contains_cone(sa_x));
  CHECK(mov.contains_cone(sa_xp));

  // setwise union check on sample points
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    RatVec p = random_interior_point(rng, t % 2 ? sa_x : sa_xp);
    CHECK(mov.contains(p));
    RatVec q = random_interior_point(rng, mov);
    CHECK((sa_x.contains(q) || sa_xp.contains(q)));
  }

  CHECK(effective_cone(bl2p3()).contains_cone(mov));
}

TEST_CASE("section counts") {
  CHECK(h0(bl2p3(), rv({1, 0, 0})) == 4);
  CHECK(h0(bl2p3(), rv({0, 1, 0})) == 1);
  CHECK(h0(bl2p3(), rv({-1, 0, 0})) == 0);
  CHECK(h0(fixture("p2"), rv({2})) == 6);  // degree-2 monomials in 3 variables

  CHECK_THROWS_AS(h0(bl2p3(), RatVec{Rat(1, 2), Rat(0), Rat(0)}), Error);
  CHECK_THROWS_AS(h0(bl2p3(), rv({4, 4, 4}), 10), Error);  // ceiling of 10 sections

  for (long long a = 0; a <= 3; ++a)
    for (long long b = -1; b <= 2; ++b)
      for (long long c = -1; c <= 2; ++c) {
        IntVec d = iv({a, b, c});
        CHECK(h0(bl2p3(), to_rat(d)) == h0_box_oracle(bl2p3(), d));
      }
}

TEST_CASE("zariski decomposition") {
  ZariskiDecomposition zd = zariski(bl2p3(), rv({1, 1, 0}));
  CHECK(zd.positive == rv({1, 0, 0}));
  CHECK(zd.negative == rv({0, 1, 0}));
  CHECK(zd.negative_coefficients == RatVec{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)});
  CHECK(zd.cone == mk_cone({{0, 1, 0}, {1, 0, 0}}));

  ZariskiDecomposition inside = zariski(bl2p3(), rv({3, -1, -1}));
  CHECK(is_zero(inside.negative));
  CHECK(inside.positive == rv({3, -1, -1}));

  // movable classes have trivial negative part
  for (const auto& r : moving_cone(bl2p3()).rays()) CHECK(is_zero(zariski(bl2p3(), to_rat(r)).negative));

  CHECK_THROWS_AS(zariski(bl2p3(), rv({-1, 0, 0})), Error);

  ZariskiDecomposition zero = zariski(bl2p3(), rv({0, 0, 0}));
  CHECK(is_zero(zero.positive));
  CHECK(is_zero(zero.negative));
  CHECK(zero.cone.dim() == 0);
}

TEST_CASE("zariski output is independent of the generator order") {
  std::vector<Generator> gens = bl2p3().generators();
  std::reverse(gens.begin(), gens.end());
  WeightSystem reversed(3, gens);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 25; ++t) {
    RatVec d = random_interior_point(rng, effective_cone(bl2p3()));
    ZariskiDecomposition a = zariski(bl2p3(), d);
    ZariskiDecomposition b = zariski(reversed, d);
    CHECK(a.positive == b.positive);
    CHECK(a.negative == b.negative);
    RatVec reversed_coeffs(b.negative_coefficients.rbegin(), b.negative_coefficients.rend());
    CHECK(a.negative_coefficients == reversed_coeffs);
  }
}

TEST_CASE("section-count certificate for the decomposition") {
  for (long long a = 0; a <= 2; ++a)
    for (long long b = -1; b <= 2; ++b)
      for (long long c = -1; c <= 1; ++c) {
        RatVec d = rv({a, b, c});
        if (!effective_cone(bl2p3()).contains(d)) continue;
        ZariskiDecomposition zd = zariski(bl2p3(), d);
        Int m = lcm(least_integral_multiple(zd.positive), least_integral_multiple(zd.negative));
        for (Int k : std::vector<Int>{m, Int(2 * m), Int(3 * m)}) {
          CHECK(h0(bl2p3(), scale(Rat(k), d)) == h0(bl2p3(), scale(Rat(k), zd.positive)));
          CHECK(h0(bl2p3(), scale(Rat(k), zd.negative)) == 1);
        }
        CHECK(moving_cone(bl2p3()).contains(zd.positive));
        for (const auto& coeff : zd.negative_coefficients) CHECK(coeff >= 0);
      }
}

TEST_CASE("zariski is piecewise linear on the chambers") {
  std::mt19937_64 rng(13);
  for (const auto& name : {"bl2p3", "f1", "bl1p3"}) {
    const WeightSystem& ws = fixture(name);
    Fan fan = git_fan(ws);
    for (auto ci : fan.maximal) {
      const Cone& chamber = fan.cones[ci];
      for (int t = 0; t < 10; ++t) {
        RatVec d1 = random_interior_point(rng, chamber);
        RatVec d2 = random_interior_point(rng, chamber);
        Rat q1(1 + t % 5, 2), q2(3, 1 + t % 3);
        ZariskiDecomposition z1 = zariski(ws, d1);
        ZariskiDecomposition z2 = zariski(ws, d2);
        ZariskiDecomposition zc = zariski(ws, add(scale(q1, d1), scale(q2, d2)));
        CHECK(zc.positive == add(scale(q1, z1.positive), scale(q2, z2.positive)));
        CHECK(zc.negative_coefficients ==
              add(scale(q1, z1.negative_coefficients), scale(q2, z2.negative_coefficients)));
      }
    }
  }
}

TEST_CASE("negative-part support is constant on relative interiors") {
  std::mt19937_64 rng(19);
  const WeightSystem& ws = bl2p3();
  for (const auto& c : git_fan(ws).cones) {
    if (c.dim() == 0) continue;
    std::vector<std::vector<bool>> patterns;
    for (int t = 0; t < 3; ++t) {
      RatVec p = random_interior_point(rng, c);
      ZariskiDecomposition zd = zariski(ws, p);
      std::vector<bool> pat;
      for (const auto& a : zd.negative_coefficients) pat.push_back(a > 0);
      patterns.push_back(std::move(pat));
    }
    CHECK(patterns[1] == patterns[0]);
    CHECK(patterns[2] == patterns[0]);
  }
}

TEST_CASE("chamber info") {
  ChamberInfo sa = chamber_info(bl2p3(), rv({1, 0, 0}));
  CHECK(sa.kind == ConeKind::Chamber);
  CHECK(sa.cone == mk_cone({{1, 0, 0}, {1, -1, 0}, {1, 0, -1}}));
  CHECK(sa.exceptional_indices.empty());
  CHECK(sa.positive_face == sa.cone);

  ChamberInfo cell = chamber_info(bl2p3(), rv({1, 1, 0}));
  CHECK(cell.kind == ConeKind::Cell);
  CHECK(cell.dim == 2);
  CHECK(cell.cone == mk_cone({{1, 0, 0}, {0, 1, 0}}));
  CHECK(cell.positive_face == mk_cone({{1, 0, 0}}));
  CHECK(cell.exceptional_indices == std::vector<int>{4});

  ChamberInfo ch = chamber_info(bl2p3(), rv({2, 1, -1}));
  CHECK(ch.kind == ConeKind::Chamber);
  CHECK(ch.cone == mk_cone({{1, 0, 0}, {0, 1, 0}, {1, 0, -1}}));
  CHECK(ch.exceptional_indices == std::vector<int>{4});
  CHECK(ch.positive_face == mk_cone({{1, 0, 0}, {1, 0, -1}}));

  CHECK_THROWS_AS(chamber_info(bl2p3(), rv({0, 0, 0})), Error);
  CHECK_THROWS_AS(chamber_info(bl2p3(), rv({-1, 0, 0})), Error);
}

TEST_CASE("chamber join decomposition") {
  // positive_face joined with the cone over the exceptional classes
  // recovers the chamber, with complementary dimensions
  std::mt19937_64 rng(31);
  const WeightSystem& ws = bl2p3();
  for (const auto& c : git_fan(ws).cones) {
    if (c.dim() == 0) continue;
    ChamberInfo info = chamber_info(ws, c.interior_sample());
    CHECK(info.cone == c);
    std::vector<IntVec> joined = info.positive_face.rays();
    std::vector<IntVec> exc_classes;
    for (int i : info.exceptional_indices) {
      joined.push_back(ws.cls(i));
      exc_classes.push_back(ws.cls(i));
    }
    CHECK(cone_from_generators(3, joined) == c);
    Cone exc = cone_from_generators(3, exc_classes);
    CHECK(info.positive_face.dim() + exc.dim() == c.dim());
  }
}

TEST_CASE("strong Mori equivalence") {
  CHECK(strong_mori_equivalent(bl2p3(), rv({1, 0, 0}), rv({1, 0, 0})));
  CHECK(strong_mori_equivalent(bl2p3(), rv({1, 1, 0}), rv({2, 1, 0})));
  CHECK_FALSE(strong_mori_equivalent(bl2p3(), rv({1, 0, 0}), rv({1, 1, 0})));

  // both routes agree on random effective pairs (they throw otherwise)
  std::mt19937_64 rng(37);
  Cone eff = effective_cone(bl2p3());
  for (int t = 0; t < 40; ++t) {
    RatVec a = random_interior_point(rng, eff);
    RatVec b = t % 2 ? random_interior_point(rng, eff) : scale(Rat(3, 2), a);
    CHECK_NOTHROW(strong_mori_equivalent(bl2p3(), a, b));
    if (t % 2 == 1) CHECK(strong_mori_equivalent(bl2p3(), a, b));
  }
}
