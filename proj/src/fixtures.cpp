#include "morifan/fixtures.hpp"

#include <map>

namespace morifan {

namespace {

IntVec iv(std::initializer_list<long long> xs) {
  IntVec v;
  for (auto x : xs) v.push_back(Int(x));
  return v;
}

std::map<std::string, WeightSystem> build_fixtures() {
  std::map<std::string, WeightSystem> m;
  m.emplace("p2", WeightSystem(1,
                               {{"x0", iv({1})}, {"x1", iv({1})}, {"x2", iv({1})}},
                               {"H"}, iv({1})));
  m.emplace("p3", WeightSystem(1,
                               {{"x0", iv({1})}, {"x1", iv({1})}, {"x2", iv({1})}, {"x3", iv({1})}},
                               {"H"}, iv({1})));
  m.emplace("p1xp1", WeightSystem(2,
                                  {{"x0", iv({1, 0})},
                                   {"x1", iv({1, 0})},
                                   {"y0", iv({0, 1})},
                                   {"y1", iv({0, 1})}},
                                  {"H1", "H2"}, iv({1, 1})));
  // Blow-up of P^2 in one point; x1, x2 vanish on lines through the point.
  m.emplace("f1", WeightSystem(2,
                               {{"x0", iv({1, 0})},
                                {"x1", iv({1, -1})},
                                {"x2", iv({1, -1})},
                                {"e", iv({0, 1})}},
                               {"H", "E"}, iv({2, -1})));
  // Blow-up of P^3 in one point p1 = (0:0:0:1).
  m.emplace("bl1p3", WeightSystem(2,
                                  {{"x0", iv({1, -1})},
                                   {"x1", iv({1, -1})},
                                   {"x2", iv({1, -1})},
                                   {"x3", iv({1, 0})},
                                   {"e1", iv({0, 1})}},
                                  {"H", "E1"}, iv({2, -1})));
  // Blow-up of P^3 in p1 = (0:0:0:1) and p2 = (0:0:1:0); x0, x1 vanish on
  // planes through both points, x2 through p1 only, x3 through p2 only.
  m.emplace("bl2p3", WeightSystem(3,
                                  {{"x0", iv({1, -1, -1})},
                                   {"x1", iv({1, -1, -1})},
                                   {"x2", iv({1, -1, 0})},
                                   {"x3", iv({1, 0, -1})},
                                   {"e1", iv({0, 1, 0})},
                                   {"e2", iv({0, 0, 1})}},
                                  {"H", "E1", "E2"}, iv({3, -1, -1})));
  return m;
}

std::map<std::string, FixtureMap> build_maps() {
  std::map<std::string, FixtureMap> m;
  auto put = [&](const std::string& name, const std::string& x, const std::string& y,
                 std::vector<IntVec> rows, int source_rank) {
    m.emplace(name, FixtureMap{name, x, y, PullbackMap::from_rows(std::move(rows), source_rank)});
  };
  put("bl2p3->bl1p3", "bl2p3", "bl1p3", {iv({1, 0}), iv({0, 1}), iv({0, 0})}, 2);
  put("bl2p3->p3", "bl2p3", "p3", {iv({1}), iv({0}), iv({0})}, 1);
  put("bl1p3->p3", "bl1p3", "p3", {iv({1}), iv({0})}, 1);
  // Z2-quotient of bl2p3 swapping the two blown-up points; the invariant
  // subspace has basis (H, E1+E2).
  put("bl2p3->z2quot", "bl2p3", "", {iv({1, 0}), iv({0, 1}), iv({0, 1})}, 2);
  return m;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"p2", "p1xp1", "f1", "p3", "bl1p3", "bl2p3"}; }

const WeightSystem& fixture(const std::string& name) {
  static const std::map<std::string, WeightSystem> fixtures = build_fixtures();
  auto it = fixtures.find(name);
  if (it == fixtures.end()) throw Error(Errc::Parse, "unknown fixture '" + name + "'");
  return it->second;
}

std::vector<std::string> fixture_map_names() {
  return {"bl2p3->bl1p3", "bl2p3->p3", "bl1p3->p3", "bl2p3->z2quot"};
}

const FixtureMap& fixture_map(const std::string& name) {
  static const std::map<std::string, FixtureMap> maps = build_maps();
  // Accept the arrow spelling used in prose.
  std::string key = name;
  for (std::string::size_type p; (p = key.find("→")) != std::string::npos;)
    key.replace(p, 3, "->");
  auto it = maps.find(key);
  if (it == maps.end()) throw Error(Errc::Parse, "unknown fixture map '" + name + "'");
  return it->second;
}

const Fan& z2quot_golden_fan() {
  static const Fan fan = [] {
    std::vector<Cone> maximal;
    maximal.push_back(cone_from_generators(2, {iv({0, 1}), iv({1, 0})}));
    maximal.push_back(cone_from_generators(2, {iv({1, 0}), iv({2, -1})}));
    maximal.push_back(cone_from_generators(2, {iv({2, -1}), iv({1, -1})}));
    return make_fan(2, maximal);
  }();
  return fan;
}

}  // namespace morifan
