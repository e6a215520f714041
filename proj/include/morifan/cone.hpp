#pragma once

#include <optional>
#include <vector>

#include "morifan/types.hpp"

namespace morifan {

// Pointed rational polyhedral cone in canonical dual-pair form: primitive
// extremal rays (lex-sorted) plus primitive supporting covectors cutting out
// the cone inside its linear span. Structural equality = geometric equality.
class Cone {
 public:
  Cone() = default;

  static Cone zero(int ambient);

  int ambient_rank() const { return ambient_; }
  int dim() const { return dim_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<IntVec>& facets() const { return facets_; }
  const std::vector<IntVec>& span_orth() const { return span_orth_; }

  bool contains(const RatVec& x) const;
  bool contains(const IntVec& x) const { return contains(to_rat(x)); }
  bool contains_cone(const Cone& other) const;

  // Strictly positive combination of the extremal rays: a point of the
  // relative interior (the zero vector for the zero cone).
  RatVec interior_sample() const;

  bool operator==(const Cone& o) const { return ambient_ == o.ambient_ && rays_ == o.rays_; }
  bool operator!=(const Cone& o) const { return !(*this == o); }
  bool operator<(const Cone& o) const;

 private:
  friend Cone cone_from_generators(int, const std::vector<IntVec>&);
  int ambient_ = 0;
  int dim_ = 0;
  std::vector<IntVec> rays_;
  std::vector<IntVec> facets_;
  std::vector<IntVec> span_orth_;
};

// Canonical cone spanned by the given vectors. Throws NonPointedError (with a
// lineality direction) if the nonnegative span contains a line.
Cone cone_from_generators(int ambient, const std::vector<IntVec>& generators);
Cone cone_from_generators(int ambient, const std::vector<RatVec>& generators);

// Canonical cone { x : ineq . x >= 0, eq . x = 0 }. Throws NonPointedError if
// the solution set contains a line.
Cone cone_from_halfspaces(int ambient, const std::vector<IntVec>& ineqs,
                          const std::vector<IntVec>& eqs);

// { y : y . x >= 0 for all x in c }; requires c full-dimensional, otherwise
// the dual contains a line and NonPointedError is thrown.
Cone dual_cone(const Cone& c);

struct Location {
  enum Kind { RelativeInterior, OnFace, Outside } kind;
  std::optional<Cone> face;  // smallest face containing x (when OnFace)
};
Location locate(const Cone& c, const RatVec& x);

Cone intersect_cones(const Cone& a, const Cone& b);

// All faces including {0} and the cone itself, canonical, no duplicates.
std::vector<Cone> faces(const Cone& c);

bool is_face_of(const Cone& face, const Cone& cone);

// { y : sum_i y_i basis_i  in  c }, expressed in basis coordinates. Throws
// Errc::NonInjectiveBasis when the basis vectors are dependent.
Cone restrict_cone(const Cone& c, const std::vector<RatVec>& basis);

}  // namespace morifan
