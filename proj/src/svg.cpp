#include "coxhull/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_set>

namespace coxhull {

namespace {

constexpr double kScale = 100.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);  // no "-0.000"
  return buf;
}

// Line segments have no area; draw the cells of the line as thin strips.
std::vector<Vec2> drawable(const Tessellation& t, const Chamber& c) {
  std::vector<Vec2> poly = t.polygon(c);
  if (poly.size() != 2) return poly;
  const RingScalar h(1, 0, 4);
  return {{poly[0].x, -h}, {poly[1].x, -h}, {poly[1].x, h}, {poly[0].x, h}};
}

// The part of {p : n . p = k} inside the box, if it crosses the box.
bool clip(double nx, double ny, double k, const SvgScene& s, SvgLine& out) {
  std::vector<std::pair<double, double>> hits;
  auto add = [&](double x, double y) {
    const double eps = 1e-9;
    if (x >= s.min_x - eps && x <= s.max_x + eps && y >= s.min_y - eps && y <= s.max_y + eps) hits.emplace_back(x, y);
  };
  if (std::abs(ny) > 1e-12) {
    add(s.min_x, (k - nx * s.min_x) / ny);
    add(s.max_x, (k - nx * s.max_x) / ny);
  }
  if (std::abs(nx) > 1e-12) {
    add((k - ny * s.min_y) / nx, s.min_y);
    add((k - ny * s.max_y) / nx, s.max_y);
  }
  if (hits.size() < 2) return false;
  std::sort(hits.begin(), hits.end());
  out.x1 = hits.front().first;
  out.y1 = hits.front().second;
  out.x2 = hits.back().first;
  out.y2 = hits.back().second;
  return std::hypot(out.x2 - out.x1, out.y2 - out.y1) > 1e-9;
}

}  // namespace

std::string_view fill_class_name(FillClass c) {
  switch (c) {
    case FillClass::HullUv: return "hull-uv";
    case FillClass::HullVw: return "hull-vw";
    case FillClass::HullUvw: return "hull-uvw";
    case FillClass::Plain: return "plain";
  }
  return "plain";
}

std::size_t SvgScene::count(FillClass c) const {
  return static_cast<std::size_t>(
      std::count_if(polygons.begin(), polygons.end(), [c](const SvgPolygon& p) { return p.fill == c; }));
}

SvgScene build_scene(const Tessellation& t, const Chamber& u, const Chamber& v, const Chamber* w) {
  const Chamber uv_pts[] = {u, v};
  const ChamberSet uv = halfspace_hull(t, uv_pts);
  ChamberSet vw, uvw;
  if (w) {
    const Chamber vw_pts[] = {v, *w};
    const Chamber uvw_pts[] = {u, v, *w};
    vw = halfspace_hull(t, vw_pts);
    uvw = halfspace_hull(t, uvw_pts);
  }
  const ChamberSet& outer = w ? uvw : uv;

  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
  for (const auto& c : outer) {
    lo_x = std::min(lo_x, c.barycenter.x.to_double());
    hi_x = std::max(hi_x, c.barycenter.x.to_double());
    lo_y = std::min(lo_y, c.barycenter.y.to_double());
    hi_y = std::max(hi_y, c.barycenter.y.to_double());
  }
  auto near = [&](const Chamber& c) {
    const double x = c.barycenter.x.to_double(), y = c.barycenter.y.to_double();
    return x >= lo_x - 1 && x <= hi_x + 1 && y >= lo_y - 1 && y <= hi_y + 1;
  };

  // Chambers whose barycenters lie within one unit of the hull's box.
  std::vector<Chamber> shown{u};
  std::unordered_set<ChamberKey, ChamberKeyHash> seen{u.key};
  for (std::size_t i = 0; i < shown.size(); ++i) {
    for (std::size_t g = 0; g < t.rank(); ++g) {
      Chamber n = t.neighbor(shown[i], static_cast<int>(g));
      if (seen.count(n.key) || !near(n)) continue;
      seen.insert(n.key);
      shown.push_back(std::move(n));
    }
  }
  std::sort(shown.begin(), shown.end());

  SvgScene s;
  for (const auto& c : shown) {
    FillClass f = FillClass::Plain;
    if (uv.contains(c))
      f = FillClass::HullUv;
    else if (w && vw.contains(c))
      f = FillClass::HullVw;
    else if (w && uvw.contains(c))
      f = FillClass::HullUvw;
    s.polygons.push_back({drawable(t, c), f});
  }
  s.labels.push_back({"u", u.barycenter});
  s.labels.push_back({"v", v.barycenter});
  if (w) s.labels.push_back({"w", w->barycenter});

  s.min_x = s.min_y = 1e300;
  s.max_x = s.max_y = -1e300;
  for (const auto& p : s.polygons) {
    for (const auto& q : p.vertices) {
      s.min_x = std::min(s.min_x, q.x.to_double());
      s.max_x = std::max(s.max_x, q.x.to_double());
      s.min_y = std::min(s.min_y, q.y.to_double());
      s.max_y = std::max(s.max_y, q.y.to_double());
    }
  }
  const double mx = 0.05 * (s.max_x - s.min_x), my = 0.05 * (s.max_y - s.min_y);
  s.min_x -= mx;
  s.max_x += mx;
  s.min_y -= my;
  s.max_y += my;

  for (std::size_t f = 0; f < t.families().size(); ++f) {
    const double px = t.families()[f].projector.x.to_double();
    const double py = t.families()[f].projector.y.to_double();
    double lo = 1e300, hi = -1e300;
    for (double x : {s.min_x, s.max_x})
      for (double y : {s.min_y, s.max_y}) {
        lo = std::min(lo, px * x + py * y);
        hi = std::max(hi, px * x + py * y);
      }
    for (auto k = static_cast<long long>(std::ceil(lo)); k <= static_cast<long long>(std::floor(hi)); ++k) {
      SvgLine line{0, 0, 0, 0, static_cast<int>(f)};
      if (clip(px, py, static_cast<double>(k), s, line)) s.walls.push_back(line);
    }
  }
  return s;
}

std::string SvgScene::render() const {
  std::ostringstream os;
  const double w = (max_x - min_x) * kScale, h = (max_y - min_y) * kScale;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(min_x * kScale) << ' ' << num(-max_y * kScale)
     << ' ' << num(w) << ' ' << num(h) << "\" width=\"" << num(w) << "\" height=\"" << num(h) << "\">\n";
  os << "<style>\n"
        "  polygon { stroke: #555; stroke-width: 0.5; }\n"
        "  .plain { fill: #ffffff; }\n"
        "  .hull-uv { fill: #f4a261; }\n"
        "  .hull-vw { fill: #2a9d8f; }\n"
        "  .hull-uvw { fill: #cccccc; }\n"
        "  .wall { stroke: #222; stroke-width: 1; }\n"
        "  text { font: 24px sans-serif; text-anchor: middle; dominant-baseline: middle; }\n"
        "</style>\n";
  for (const auto& p : polygons) {
    os << "<polygon class=\"" << fill_class_name(p.fill) << "\" points=\"";
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
      os << (i ? " " : "") << num(p.vertices[i].x.to_double() * kScale) << ','
         << num(-p.vertices[i].y.to_double() * kScale);
    os << "\"/>\n";
  }
  for (const auto& l : walls) {
    os << "<line class=\"wall\" data-family=\"" << l.family << "\" x1=\"" << num(l.x1 * kScale) << "\" y1=\""
       << num(-l.y1 * kScale) << "\" x2=\"" << num(l.x2 * kScale) << "\" y2=\"" << num(-l.y2 * kScale) << "\"/>\n";
  }
  for (const auto& l : labels) {
    os << "<text x=\"" << num(l.at.x.to_double() * kScale) << "\" y=\"" << num(-l.at.y.to_double() * kScale) << "\">"
       << l.text << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace coxhull
