#pragma once

#include <string>
#include <vector>

#include "morifan/cone.hpp"
#include "morifan/types.hpp"

namespace morifan {

enum class ConeKind { Chamber, Cell, Origin };

std::string kind_name(ConeKind k);

// Finite face-closed set of cones with pairwise face-compatible
// intersections. Cones are kept in canonical order (dim, then rays), so two
// fans are equal iff their cone lists are equal.
struct Fan {
  int ambient_rank = 0;
  std::vector<Cone> cones;
  std::vector<std::size_t> maximal;  // indices of inclusion-maximal cones
  std::vector<ConeKind> kinds;       // parallel to cones

  bool operator==(const Fan& o) const { return ambient_rank == o.ambient_rank && cones == o.cones; }
  bool operator!=(const Fan& o) const { return !(*this == o); }

  const Cone* find(const Cone& c) const;
  std::vector<const Cone*> maximal_cones() const;
};

// Face closure + canonicalization of a set of cones.
Fan make_fan(int ambient, const std::vector<Cone>& cones);

// Fan whose maximal cones are the closures of the classes of "same membership
// pattern in every input cone and every face thereof", restricted to
// `within`. Implemented as a hyperplane-arrangement region enumeration: the
// walls all lie on hyperplanes spanned by (rank-1)-subsets of the pooled
// input rays.
Fan common_refinement(const std::vector<Cone>& cones, const Cone& within);

// Throws Errc::Validation when the fan axioms fail (duplicate cones, missing
// faces, or a pairwise intersection that is not a face of both sides).
void check_fan_axioms(const Fan& fan);

}  // namespace morifan
