#include "morifan/slice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "morifan/divisor.hpp"
#include "morifan/linalg.hpp"

namespace morifan {

namespace {

RatVec plane_point(const IntVec& ray, const IntVec& u) {
  Rat s = Rat(1) / Rat(dot(u, ray));
  return scale(s, to_rat(ray));
}

// Coordinates of v in the 2-plane spanned by b1, b2.
std::pair<Rat, Rat> chart(const RatVec& v, const IntVec& b1, const IntVec& b2) {
  RatMat rows;
  for (std::size_t r = 0; r < v.size(); ++r) rows.push_back({Rat(b1[r]), Rat(b2[r])});
  auto sol = solve(rows, v);
  if (!sol) throw Error(Errc::Validation, "slice point escaped the plane");
  return {(*sol)[0], (*sol)[1]};
}

}  // namespace

SliceDoc slice_fan(const WeightSystem& ws, const std::vector<IntVec>* subspace) {
  if (ws.rank() != 3) throw Error(Errc::Validation, "slice requires a rank-3 weight system");

  Cone eff = effective_cone(ws);
  IntVec u(3, Int(0));
  for (const auto& f : eff.facets())
    for (int r = 0; r < 3; ++r) u[r] += f[r];

  SliceDoc doc;
  doc.plane = u;
  for (const auto& r : eff.rays()) {
    SliceCorner corner;
    corner.ray = r;
    for (const auto& g : ws.generators())
      if (primitive(g.cls) == r) corner.labels.push_back(g.name);
    doc.corners.push_back(std::move(corner));
  }

  std::vector<IntVec> plane_basis = kernel_basis_int({u}, 3);
  Fan fan = git_fan(ws);
  for (std::size_t i : fan.maximal) {
    const Cone& c = fan.cones[i];
    SlicePolygon poly;
    poly.cone = c;
    poly.kind = fan.kinds[i];
    for (const auto& r : c.rays()) poly.vertices.push_back(plane_point(r, u));

    if (poly.vertices.size() > 2) {
      // Exact counterclockwise order around the centroid.
      RatVec center(3, Rat(0));
      for (const auto& v : poly.vertices) center = add(center, v);
      center = scale(Rat(1, static_cast<long>(poly.vertices.size())), center);
      auto key = [&](const RatVec& v) { return chart(sub(v, center), plane_basis[0], plane_basis[1]); };
      std::sort(poly.vertices.begin(), poly.vertices.end(), [&](const RatVec& p, const RatVec& q) {
        auto [ax, ay] = key(p);
        auto [bx, by] = key(q);
        int ha = (ay > 0 || (ay == 0 && ax > 0)) ? 0 : 1;
        int hb = (by > 0 || (by == 0 && bx > 0)) ? 0 : 1;
        if (ha != hb) return ha < hb;
        return ax * by - ay * bx > 0;
      });
    }
    doc.polygons.push_back(std::move(poly));
  }

  if (subspace) {
    std::vector<RatVec> basis;
    for (const auto& b : *subspace) basis.push_back(to_rat(b));
    Cone restricted = restrict_cone(eff, basis);  // NonInjectiveBasis on bad input
    std::vector<RatVec> pts;
    for (const auto& y : restricted.rays()) {
      RatVec v(3, Rat(0));
      for (std::size_t k = 0; k < basis.size(); ++k) v = add(v, scale(Rat(y[k]), basis[k]));
      Rat s = dot(u, v);
      if (s <= 0) throw Error(Errc::Validation, "subspace ray misses the slice plane");
      pts.push_back(scale(Rat(1) / s, v));
    }
    doc.overlay = std::move(pts);
  }
  return doc;
}

Json slice_json(const SliceDoc& doc) {
  Json j;
  Json plane = Json::array();
  for (const auto& x : doc.plane) plane.push_back(x.convert_to<long long>());
  j["plane"] = std::move(plane);

  Json corners = Json::array();
  for (const auto& c : doc.corners) {
    Json e;
    Json ray = Json::array();
    for (const auto& x : c.ray) ray.push_back(x.convert_to<long long>());
    e["ray"] = std::move(ray);
    e["labels"] = c.labels;
    corners.push_back(std::move(e));
  }
  j["corners"] = std::move(corners);

  Json polys = Json::array();
  for (const auto& p : doc.polygons) {
    Json e;
    e["kind"] = kind_name(p.kind);
    e["cone"] = cone_json(p.cone);
    Json vs = Json::array();
    for (const auto& v : p.vertices) vs.push_back(ratvec_json(v));
    e["vertices"] = std::move(vs);
    polys.push_back(std::move(e));
  }
  j["polygons"] = std::move(polys);

  if (doc.overlay) {
    Json vs = Json::array();
    for (const auto& v : *doc.overlay) vs.push_back(ratvec_json(v));
    j["overlay"] = std::move(vs);
  }
  return j;
}

std::string slice_svg(const SliceDoc& doc) {
  // Rendering convenience only: rationals drop to doubles at the last step.
  std::vector<IntVec> plane_basis = kernel_basis_int({doc.plane}, 3);
  RatVec origin(3, Rat(0));
  std::size_t npts = 0;
  for (const auto& p : doc.polygons)
    for (const auto& v : p.vertices) {
      origin = add(origin, v);
      ++npts;
    }
  if (npts == 0) return "<svg xmlns=\"http://www.w3.org/2000/svg\"/>\n";
  origin = scale(Rat(1, static_cast<long>(npts)), origin);

  auto to2d = [&](const RatVec& v) {
    auto [a, b] = chart(sub(v, origin), plane_basis[0], plane_basis[1]);
    return std::pair<double, double>(a.convert_to<double>(), b.convert_to<double>());
  };

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  auto grow = [&](std::pair<double, double> p) {
    if (first) {
      minx = maxx = p.first;
      miny = maxy = p.second;
      first = false;
      return;
    }
    minx = std::min(minx, p.first);
    maxx = std::max(maxx, p.first);
    miny = std::min(miny, p.second);
    maxy = std::max(maxy, p.second);
  };
  for (const auto& p : doc.polygons)
    for (const auto& v : p.vertices) grow(to2d(v));

  const double W = 800, H = 800, margin = 60;
  double span = std::max({maxx - minx, maxy - miny, 1e-9});
  double scl = (W - 2 * margin) / span;
  auto px = [&](std::pair<double, double> p) {
    double x = margin + (p.first - minx) * scl;
    double y = H - margin - (p.second - miny) * scl;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", x, y);
    return std::string(buf);
  };

  static const char* palette[] = {"#c6dbef", "#fdd0a2", "#c7e9c0", "#dadaeb", "#fee0d2", "#d9d9d9"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  int ci = 0;
  for (const auto& p : doc.polygons) {
    svg << "  <polygon points=\"";
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      if (i) svg << " ";
      svg << px(to2d(p.vertices[i]));
    }
    svg << "\" fill=\"" << palette[ci++ % 6] << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
  }
  if (doc.overlay && doc.overlay->size() >= 2) {
    // double line
    svg << "  <polyline points=\"";
    for (std::size_t i = 0; i < doc.overlay->size(); ++i) {
      if (i) svg << " ";
      svg << px(to2d((*doc.overlay)[i]));
    }
    svg << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"6\"/>\n";
    svg << "  <polyline points=\"";
    for (std::size_t i = 0; i < doc.overlay->size(); ++i) {
      if (i) svg << " ";
      svg << px(to2d((*doc.overlay)[i]));
    }
    svg << "\" fill=\"none\" stroke=\"#ffffff\" stroke-width=\"2\"/>\n";
  }
  for (const auto& c : doc.corners) {
    Rat s = Rat(1) / Rat(dot(doc.plane, c.ray));
    auto p = to2d(scale(s, to_rat(c.ray)));
    std::string label;
    for (std::size_t i = 0; i < c.labels.size(); ++i) label += (i ? "," : "") + c.labels[i];
    if (label.empty()) label = "r";
    svg << "  <text x=\"" << px(p).substr(0, px(p).find(',')) << "\" y=\""
        << px(p).substr(px(p).find(',') + 1) << "\" font-size=\"18\" fill=\"#000000\">" << label
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace morifan
