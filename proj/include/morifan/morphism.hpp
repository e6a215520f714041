#pragma once

#include <string>
#include <utility>

#include "morifan/divisor.hpp"

namespace morifan {

// Injective map of class spaces Pic(Y) -> Pic(X) realizing a pullback along a
// surjection X -> Y; identifies the source's class space with a subspace.
struct PullbackMap {
  int source_rank = 0;         // rank of Y
  int target_rank = 0;         // rank of X
  std::vector<IntVec> rows;    // target_rank rows of length source_rank

  static PullbackMap from_rows(std::vector<IntVec> rows, int source_rank);
  static PullbackMap identity(int rank);

  // Images of the source basis vectors, as target-space vectors.
  std::vector<RatVec> columns() const;
};

DivisorClass pullback_class(const PullbackMap& f, const DivisorClass& d);

// Intersect every cone of the fan with the image subspace, in source
// coordinates; deduplicated and face-closed.
Fan restrict_fan(const Fan& fan, const PullbackMap& f);

struct ConeCheck {
  std::string name;
  Cone expected;
  Cone actual;
  bool pass = false;
};

struct RestrictionReport {
  bool pass = false;
  Fan expected;  // fan computed on the target side
  Fan actual;    // restriction of the source fan
  std::vector<std::pair<Cone, std::string>> mismatches;  // cone + "expected-only"/"actual-only"
  std::vector<ConeCheck> cone_checks;
};

// Compares git_fan(ws_y) with the restriction of git_fan(ws_x) along f,
// together with the Eff/Mov (and, when both amples are present, Nef) cone
// restrictions. The existence of a geometric surjection realizing f is the
// caller's assertion; a FAIL means the fixture map is wrong or no morphism
// exists, never a counterexample to the restriction theorem.
RestrictionReport verify_restriction(const WeightSystem& ws_x, const WeightSystem& ws_y,
                                     const PullbackMap& f);

RestrictionReport compare_fans(const Fan& expected, const Fan& actual);

// Fan(X; C): cones of git_fan(ws) intersected with the region (itself first
// intersected with Eff), face-closed; optionally restricted along f
// afterwards.
Fan restrict_region_fan(const WeightSystem& ws, const Cone& region, const PullbackMap* f = nullptr);

// True iff pullback and Zariski decomposition commute on D.
bool pullback_zariski_check(const WeightSystem& ws_x, const WeightSystem& ws_y,
                            const PullbackMap& f, const DivisorClass& d);

}  // namespace morifan
