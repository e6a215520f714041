#include "morifan/cone.hpp"

#include <algorithm>
#include <set>

#include "morifan/linalg.hpp"
#include "morifan/simplex.hpp"

namespace morifan {

namespace {

std::vector<IntVec> dedupe_sorted(std::vector<IntVec> vs) {
  std::sort(vs.begin(), vs.end(), [](const IntVec& a, const IntVec& b) { return lex_compare(a, b) < 0; });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Iterate over size-k index subsets of {0..n-1} in lexicographic order.
template <typename F>
void for_subsets(int n, int k, F&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// First maximal linearly independent subset, in input order.
std::vector<IntVec> independent_subset(const std::vector<IntVec>& vs) {
  std::vector<IntVec> basis;
  RatMat rows;
  for (const auto& v : vs) {
    rows.push_back(to_rat(v));
    if (rank_of(rows) == static_cast<int>(rows.size()))
      basis.push_back(v);
    else
      rows.pop_back();
  }
  return basis;
}

// If cone(gens) contains a line, some nontrivial nonnegative combination of
// the generators vanishes; any generator with positive coefficient then spans
// a line inside the cone.
std::optional<IntVec> lineality_witness(int ambient, const std::vector<IntVec>& gens) {
  if (gens.empty()) return std::nullopt;
  int n = static_cast<int>(gens.size());
  RatMat A(ambient + 1, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < ambient; ++r) A[r][i] = Rat(gens[i][r]);
    A[ambient][i] = 1;
  }
  RatVec b(ambient + 1, Rat(0));
  b[ambient] = 1;
  LpResult lp = lp_feasible(A, b);
  if (lp.status != LpStatus::Optimal) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (lp.x[i] > 0) return gens[i];
  return std::nullopt;  // unreachable: coefficients sum to 1
}

}  // namespace

Cone Cone::zero(int ambient) {
  Cone c;
  c.ambient_ = ambient;
  c.dim_ = 0;
  std::vector<IntVec> id;
  for (int i = 0; i < ambient; ++i) {
    IntVec e(ambient, Int(0));
    e[i] = 1;
    id.push_back(std::move(e));
  }
  c.span_orth_ = std::move(id);
  return c;
}

bool Cone::contains(const RatVec& x) const {
  if (static_cast<int>(x.size()) != ambient_) throw Error(Errc::DimensionMismatch, "point/cone rank mismatch");
  for (const auto& o : span_orth_)
    if (dot(o, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  return true;
}

bool Cone::contains_cone(const Cone& other) const {
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  return true;
}

RatVec Cone::interior_sample() const {
  RatVec s(ambient_, Rat(0));
  for (const auto& r : rays_) s = add(s, to_rat(r));
  return s;
}

bool Cone::operator<(const Cone& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  if (rays_.size() != o.rays_.size()) return rays_.size() < o.rays_.size();
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    int c = lex_compare(rays_[i], o.rays_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Cone cone_from_generators(int ambient, const std::vector<IntVec>& generators) {
  std::vector<IntVec> gens;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != ambient) throw Error(Errc::DimensionMismatch, "generator rank mismatch");
    if (!is_zero(g)) gens.push_back(primitive(g));
  }

  // Check pointedness before canonicalization so the witness is reported in
  // the caller's generator order.
  if (auto w = lineality_witness(ambient, gens))
    throw NonPointedError("cone contains the line through " + to_string(*w), *w);

  gens = dedupe_sorted(std::move(gens));

  Cone c;
  c.ambient_ = ambient;
  if (gens.empty()) return Cone::zero(ambient);

  c.dim_ = rank_of_int(gens);
  c.span_orth_ = kernel_basis_int(gens, ambient);

  int d = c.dim_;
  std::vector<IntVec> span_basis = independent_subset(gens);

  // Facet candidates: for each (d-1)-subset S of the generators, find the
  // covector inside span(c) vanishing on S. It supports a facet when the cone
  // lies on one side of it and the generators on it span dimension d-1.
  std::vector<IntVec> facets;
  int n = static_cast<int>(gens.size());
  for_subsets(n, d - 1, [&](const std::vector<int>& idx) {
    RatMat m;  // rows: conditions sum_k alpha_k (basis_k . s) = 0
    for (int j : idx) {
      RatVec row(d);
      for (int k = 0; k < d; ++k) row[k] = Rat(dot(span_basis[k], gens[j]));
      m.push_back(std::move(row));
    }
    std::vector<IntVec> ker = kernel_basis(m, d);
    if (ker.size() != 1) return;
    IntVec normal(ambient, Int(0));
    for (int k = 0; k < d; ++k)
      for (int r = 0; r < ambient; ++r) normal[r] += ker[0][k] * span_basis[k][r];
    normal = primitive(normal);

    bool any_pos = false, any_neg = false;
    for (const auto& g : gens) {
      Int s = dot(normal, g);
      any_pos |= s > 0;
      any_neg |= s < 0;
    }
    if (any_pos && any_neg) return;
    if (any_neg) normal = negate(normal);
    if (!any_pos && !any_neg) return;  // vanishes on everything: d==0 handled elsewhere

    std::vector<IntVec> on;
    for (const auto& g : gens)
      if (dot(normal, g) == 0) on.push_back(g);
    if (rank_of_int(on) != d - 1) return;
    facets.push_back(std::move(normal));
  });
  c.facets_ = dedupe_sorted(std::move(facets));

  // A generator is extremal iff its active facets cut dimension down to 1.
  for (const auto& g : gens) {
    std::vector<IntVec> active;
    for (const auto& f : c.facets_)
      if (dot(f, g) == 0) active.push_back(f);
    if (rank_of_int(active) == d - 1) c.rays_.push_back(g);
  }
  c.rays_ = dedupe_sorted(std::move(c.rays_));
  return c;
}

Cone cone_from_generators(int ambient, const std::vector<RatVec>& generators) {
  std::vector<IntVec> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(primitive(g));
  return cone_from_generators(ambient, gens);
}

Cone cone_from_halfspaces(int ambient, const std::vector<IntVec>& ineqs,
                          const std::vector<IntVec>& eqs) {
  std::vector<IntVec> rows = eqs;
  rows.insert(rows.end(), ineqs.begin(), ineqs.end());

  std::vector<IntVec> lin = kernel_basis_int(rows, ambient);
  if (!lin.empty())
    throw NonPointedError("halfspace cone contains the line through " + to_string(lin[0]), lin[0]);

  // Every extreme ray is the kernel of ambient-1 independent active
  // constraints, so enumerating those subsets finds them all.
  std::vector<IntVec> rays;
  int m = static_cast<int>(rows.size());
  auto feasible = [&](const IntVec& v) {
    for (const auto& e : eqs)
      if (dot(e, v) != 0) return false;
    for (const auto& f : ineqs)
      if (dot(f, v) < 0) return false;
    return true;
  };
  for_subsets(m, ambient - 1, [&](const std::vector<int>& idx) {
    std::vector<IntVec> sub;
    for (int j : idx) sub.push_back(rows[j]);
    std::vector<IntVec> ker = kernel_basis_int(sub, ambient);
    if (ker.size() != 1) return;
    IntVec v = primitive(ker[0]);
    if (feasible(v)) rays.push_back(v);
    IntVec w = negate(v);
    if (feasible(w)) rays.push_back(std::move(w));
  });
  return cone_from_generators(ambient, rays);
}

Cone dual_cone(const Cone& c) {
  if (c.dim() < c.ambient_rank()) {
    IntVec w = c.span_orth().empty() ? IntVec(c.ambient_rank(), Int(0)) : c.span_orth()[0];
    throw NonPointedError("dual of a lower-dimensional cone contains the line through " + to_string(w), w);
  }
  return cone_from_generators(c.ambient_rank(), c.facets());
}

Location locate(const Cone& c, const RatVec& x) {
  if (static_cast<int>(x.size()) != c.ambient_rank())
    throw Error(Errc::DimensionMismatch, "point/cone rank mismatch");
  for (const auto& o : c.span_orth())
    if (dot(o, x) != 0) return {Location::Outside, std::nullopt};
  std::vector<IntVec> active;
  for (const auto& f : c.facets()) {
    Rat v = dot(f, x);
    if (v < 0) return {Location::Outside, std::nullopt};
    if (v == 0) active.push_back(f);
  }
  if (active.empty()) return {Location::RelativeInterior, std::nullopt};
  std::vector<IntVec> face_rays;
  for (const auto& r : c.rays()) {
    bool on = true;
    for (const auto& f : active)
      if (dot(f, r) != 0) {
        on = false;
        break;
      }
    if (on) face_rays.push_back(r);
  }
  return {Location::OnFace, cone_from_generators(c.ambient_rank(), face_rays)};
}

Cone intersect_cones(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw Error(Errc::DimensionMismatch, "cone rank mismatch");
  std::vector<IntVec> ineqs = a.facets();
  ineqs.insert(ineqs.end(), b.facets().begin(), b.facets().end());
  std::vector<IntVec> eqs = a.span_orth();
  eqs.insert(eqs.end(), b.span_orth().begin(), b.span_orth().end());
  return cone_from_halfspaces(a.ambient_rank(), ineqs, eqs);
}

std::vector<Cone> faces(const Cone& c) {
  std::set<Cone> seen{c};
  std::vector<Cone> queue{c};
  while (!queue.empty()) {
    Cone cur = queue.back();
    queue.pop_back();
    for (const auto& f : cur.facets()) {
      std::vector<IntVec> on;
      for (const auto& r : cur.rays())
        if (dot(f, r) == 0) on.push_back(r);
      Cone child = cone_from_generators(c.ambient_rank(), on);
      if (seen.insert(child).second) queue.push_back(child);
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_face_of(const Cone& face, const Cone& cone) {
  if (!cone.contains_cone(face)) return false;
  RatVec s = face.interior_sample();
  std::vector<IntVec> active;
  for (const auto& f : cone.facets())
    if (dot(f, s) == 0) active.push_back(f);
  std::vector<IntVec> on;
  for (const auto& r : cone.rays()) {
    bool ok = true;
    for (const auto& f : active)
      if (dot(f, r) != 0) {
        ok = false;
        break;
      }
    if (ok) on.push_back(r);
  }
  return cone_from_generators(cone.ambient_rank(), on) == face;
}

Cone restrict_cone(const Cone& c, const std::vector<RatVec>& basis) {
  int k = static_cast<int>(basis.size());
  RatMat rows;
  for (const auto& b : basis) {
    if (static_cast<int>(b.size()) != c.ambient_rank())
      throw Error(Errc::DimensionMismatch, "basis vector rank mismatch");
    rows.push_back(b);
  }
  if (rank_of(rows) != k) throw Error(Errc::NonInjectiveBasis, "basis vectors are linearly dependent");

  auto compose = [&](const IntVec& f) {
    RatVec row(k);
    for (int j = 0; j < k; ++j) row[j] = dot(f, basis[j]);
    return primitive(row);
  };
  std::vector<IntVec> ineqs, eqs;
  for (const auto& f : c.facets()) ineqs.push_back(compose(f));
  for (const auto& o : c.span_orth()) eqs.push_back(compose(o));
  return cone_from_halfspaces(k, ineqs, eqs);
}

}  // namespace morifan
