#pragma once

#include <string>
#include <vector>

#include "morifan/morphism.hpp"

namespace morifan {

// Built-in weight systems: "p2", "p1xp1", "f1", "p3", "bl1p3", "bl2p3".
std::vector<std::string> fixture_names();
const WeightSystem& fixture(const std::string& name);

// Built-in pullback maps, named "<X>-><Y>" for f*: Pic(Y) -> Pic(X). The
// z2quot target is a subspace-only fixture (no weight system); its expected
// restricted fan ships as a golden fixture instead.
struct FixtureMap {
  std::string name;
  std::string x;  // source variety of the morphism (target of the pullback)
  std::string y;  // image variety; empty for subspace-only targets
  PullbackMap map;
};
std::vector<std::string> fixture_map_names();
const FixtureMap& fixture_map(const std::string& name);

// Expected fan of the z2quot subspace restriction, in basis (H, E1+E2).
const Fan& z2quot_golden_fan();

}  // namespace morifan
