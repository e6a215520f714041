#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morifan/fan.hpp"

namespace morifan {

struct Generator {
  std::string name;
  IntVec cls;  // divisor class of the Cox-ring generator, length = rank
};

// Torus-graded polynomial Cox ring presentation: one divisor class per
// generator. Construction validates that the classes span the full space and
// that their cone (the effective cone) is pointed and full-dimensional.
class WeightSystem {
 public:
  WeightSystem(int rank, std::vector<Generator> generators,
               std::vector<std::string> basis_names = {},
               std::optional<IntVec> ample = std::nullopt);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(generators_.size()); }
  const std::vector<Generator>& generators() const { return generators_; }
  const IntVec& cls(int i) const { return generators_[i].cls; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const std::optional<IntVec>& ample() const { return ample_; }

 private:
  int rank_;
  std::vector<Generator> generators_;
  std::vector<std::string> basis_names_;
  std::optional<IntVec> ample_;
};

// Subset of generator indices; stands in for a point of the affine Cox
// spectrum through its state set (every subset is realized because the Cox
// ring is a full polynomial ring).
struct SupportSet {
  std::vector<int> indices;  // strictly increasing

  static SupportSet full(int n);
  static SupportSet from_mask(std::uint32_t mask, int n);
  std::uint32_t mask() const;
};

// Cone spanned by the classes indexed by the support.
Cone state_cone(const WeightSystem& ws, const SupportSet& s);

enum class Stability { Stable, StrictlySemistable, Unstable };
std::string stability_name(Stability s);

// Cone-membership form: semistable iff chi lies in the state cone, stable iff
// it lies in the cone's full-dimensional topological interior (possibly
// empty).
Stability semistability(const WeightSystem& ws, const SupportSet& s, const RatVec& chi);

// One-parameter-subgroup form, decided by exact LP feasibility: unstable iff
// some 1-PS is nonnegative on the supported classes but negative on chi.
Stability semistability_via_1ps(const WeightSystem& ws, const SupportSet& s, const RatVec& chi);

// The fan on the effective cone whose cones' relative interiors are the
// GIT-equivalence classes. Results are memoized per weight system behind a
// synchronized cache.
Fan git_fan(const WeightSystem& ws);

struct Signature {
  std::vector<std::uint32_t> semistable;  // support masks, ascending
  std::vector<std::uint32_t> stable;      // subset of semistable, ascending

  bool operator==(const Signature& o) const = default;
};

// Semistable/stable support sets of a character; two characters are
// GIT-equivalent iff their semistable sets agree.
Signature signature(const WeightSystem& ws, const RatVec& chi);

}  // namespace morifan
