#include "morifan/fan.hpp"

#include <algorithm>
#include <set>

#include "morifan/linalg.hpp"

namespace morifan {

std::string kind_name(ConeKind k) {
  switch (k) {
    case ConeKind::Chamber: return "chamber";
    case ConeKind::Cell: return "cell";
    case ConeKind::Origin: return "origin";
  }
  return "?";
}

namespace {

ConeKind kind_of(const Cone& c, int ambient) {
  if (c.dim() == 0) return ConeKind::Origin;
  return c.dim() == ambient ? ConeKind::Chamber : ConeKind::Cell;
}

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

}  // namespace

const Cone* Fan::find(const Cone& c) const {
  auto it = std::lower_bound(cones.begin(), cones.end(), c);
  if (it != cones.end() && *it == c) return &*it;
  return nullptr;
}

std::vector<const Cone*> Fan::maximal_cones() const {
  std::vector<const Cone*> out;
  out.reserve(maximal.size());
  for (auto i : maximal) out.push_back(&cones[i]);
  return out;
}

Fan make_fan(int ambient, const std::vector<Cone>& input) {
  std::set<Cone> all;
  for (const auto& c : input) {
    for (auto& f : faces(c)) all.insert(std::move(f));
  }
  if (all.empty()) all.insert(Cone::zero(ambient));

  Fan fan;
  fan.ambient_rank = ambient;
  fan.cones.assign(all.begin(), all.end());
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < fan.cones.size(); ++j) {
      if (i == j) continue;
      if (fan.cones[j].dim() >= fan.cones[i].dim() && fan.cones[j] != fan.cones[i] &&
          fan.cones[j].contains_cone(fan.cones[i])) {
        maximal = false;
        break;
      }
    }
    if (maximal) fan.maximal.push_back(i);
    fan.kinds.push_back(kind_of(fan.cones[i], ambient));
  }
  return fan;
}

Fan common_refinement(const std::vector<Cone>& cones, const Cone& within) {
  int rank = within.ambient_rank();
  for (const auto& c : cones) {
    if (c.ambient_rank() != rank) throw Error(Errc::DimensionMismatch, "refinement rank mismatch");
    if (!within.contains_cone(c))
      throw Error(Errc::Validation, "refinement input cone not contained in `within`");
  }

  // Pool the primitive rays of all input cones; every wall of the refinement
  // lies on a hyperplane spanned by rank-1 of them (or on a facet of
  // `within`).
  std::vector<IntVec> pool;
  {
    std::set<IntVec> s;
    for (const auto& c : cones)
      for (const auto& r : c.rays()) s.insert(r);
    pool.assign(s.begin(), s.end());
  }

  std::set<IntVec> normals;
  int n = static_cast<int>(pool.size());
  for_subsets(n, rank - 1, [&](const std::vector<int>& idx) {
    std::vector<IntVec> sub;
    for (int j : idx) sub.push_back(pool[j]);
    if (rank_of_int(sub) != rank - 1) return;
    std::vector<IntVec> ker = kernel_basis_int(sub, rank);
    if (ker.size() != 1) return;
    normals.insert(primitive_signed(ker[0]));
  });
  for (const auto& f : within.facets()) normals.insert(primitive_signed(f));

  // Split `within` along each hyperplane that crosses a region's relative
  // interior.
  std::vector<Cone> regions{within};
  for (const auto& h : normals) {
    std::vector<Cone> next;
    next.reserve(regions.size());
    for (const auto& region : regions) {
      bool pos = false, neg = false;
      for (const auto& r : region.rays()) {
        Int s = dot(h, r);
        pos |= s > 0;
        neg |= s < 0;
      }
      if (!(pos && neg)) {
        next.push_back(region);
        continue;
      }
      std::vector<IntVec> ineqs = region.facets();
      ineqs.push_back(h);
      next.push_back(cone_from_halfspaces(rank, ineqs, region.span_orth()));
      ineqs.back() = negate(h);
      next.push_back(cone_from_halfspaces(rank, ineqs, region.span_orth()));
    }
    regions = std::move(next);
  }

  // Not every pooled hyperplane is a wall: adjacent regions whose membership
  // pattern (over the inputs and all their faces) agrees belong to one
  // equivalence class and are merged. The class closures must come out
  // convex and interior-disjoint, which is verified below.
  std::set<Cone> family;
  for (const auto& c : cones)
    for (auto& f : faces(c)) family.insert(std::move(f));

  std::vector<RatVec> samples;
  samples.reserve(regions.size());
  for (const auto& r : regions) samples.push_back(r.interior_sample());

  std::map<std::vector<bool>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    std::vector<bool> pattern;
    pattern.reserve(family.size());
    for (const auto& f : family) pattern.push_back(f.contains(samples[i]));
    groups[std::move(pattern)].push_back(i);
  }

  std::vector<Cone> merged;
  std::vector<std::vector<std::size_t>> members;
  for (const auto& [pattern, idxs] : groups) {
    std::vector<IntVec> rays;
    for (std::size_t i : idxs)
      for (const auto& r : regions[i].rays()) rays.push_back(r);
    merged.push_back(cone_from_generators(rank, rays));
    members.push_back(idxs);
  }
  for (std::size_t g = 0; g < merged.size(); ++g) {
    for (std::size_t i = 0; i < regions.size(); ++i) {
      bool own = std::find(members[g].begin(), members[g].end(), i) != members[g].end();
      if (!own && merged[g].contains(samples[i]))
        throw Error(Errc::Validation, "refinement classes are not closures of cones");
    }
  }
  for (std::size_t a = 0; a < merged.size(); ++a) {
    for (std::size_t b = a + 1; b < merged.size(); ++b) {
      Cone inter = intersect_cones(merged[a], merged[b]);
      if (!is_face_of(inter, merged[a]) || !is_face_of(inter, merged[b]))
        throw Error(Errc::Validation, "refinement classes do not meet along faces");
    }
  }
  return make_fan(rank, merged);
}

void check_fan_axioms(const Fan& fan) {
  std::set<Cone> all(fan.cones.begin(), fan.cones.end());
  if (all.size() != fan.cones.size()) throw Error(Errc::Validation, "fan has duplicate cones");
  for (const auto& c : fan.cones)
    for (const auto& f : faces(c))
      if (!all.count(f)) throw Error(Errc::Validation, "fan is not face-closed");
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    for (std::size_t j = i + 1; j < fan.cones.size(); ++j) {
      Cone inter = intersect_cones(fan.cones[i], fan.cones[j]);
      if (!all.count(inter) || !is_face_of(inter, fan.cones[i]) || !is_face_of(inter, fan.cones[j]))
        throw Error(Errc::Validation, "pairwise intersection is not a common face");
    }
  }
}

}  // namespace morifan
