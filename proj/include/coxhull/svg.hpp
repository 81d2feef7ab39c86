#pragma once

#include <string>
#include <vector>

#include "coxhull/convexity.hpp"

namespace coxhull {

// Fill class of a drawn chamber. A chamber gets the first class that applies,
// in declaration order, so every polygon belongs to exactly one set.
enum class FillClass { HullUv, HullVw, HullUvw, Plain };

std::string_view fill_class_name(FillClass c);

struct SvgPolygon {
  std::vector<Vec2> vertices;
  FillClass fill = FillClass::Plain;
};

struct SvgLabel {
  std::string text;
  Vec2 at;
};

struct SvgLine {
  double x1, y1, x2, y2;
  int family;
};

// Chamber polygons and labels stay exact; walls and the viewport are decimal
// because they are only needed for output.
struct SvgScene {
  std::vector<SvgPolygon> polygons;
  std::vector<SvgLabel> labels;
  std::vector<SvgLine> walls;
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;

  std::size_t count(FillClass c) const;
  std::string render() const;
};

// Hull chambers of (u, v) and, if `w` is given, (v, w) and (u, v, w), plus a
// ring of plain chambers around them. Walls are clipped to the viewport,
// which fits all polygons with a 5% margin.
SvgScene build_scene(const Tessellation& t, const Chamber& u, const Chamber& v, const Chamber* w = nullptr);

}  // namespace coxhull
