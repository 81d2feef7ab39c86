#include "coxhull/formulas.hpp"

#include <string>

#include "coxhull/error.hpp"

namespace coxhull {

namespace {

void require(bool ok, ErrorKind kind, const std::string& condition) {
  if (!ok) throw Error(kind, "condition violated: " + condition);
}

std::int64_t mod(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

BigInt even_count(const BigInt& x, const BigInt& y) { return x * y + x - y * y + y + 1; }
BigInt odd_count(const BigInt& x, const BigInt& y) { return x * y + x - y * y + 2 * y + 1; }

void require_case2_base(const C2CaseParams& p) {
  require(mod(p.a, 4) == 2, ErrorKind::ConstraintViolation, "a = 2 (mod 4)");
  require(mod(p.x, 4) == 1, ErrorKind::ConstraintViolation, "x = 1 (mod 4)");
  require(p.b >= 2, ErrorKind::ConstraintViolation, "b >= 2");
  require(p.y > p.b, ErrorKind::ConstraintViolation, "y > b");
  require(p.x >= p.a + 3, ErrorKind::ConstraintViolation, "x >= a + 3");
}

Vec2 a2_center(const Vec2& u_center, std::int64_t x, std::int64_t y) {
  // Horizontal center x half-edges right; vertically, the middle of the row.
  const RingScalar row_height(0, 1, 2);
  return {u_center.x + RingScalar(x, 0, 2), row_height * RingScalar(2 * y + 1, 0, 2)};
}

// Centroid of one half of the unit square [i, i+1] x [j, j+1]. Squares with
// i + j odd are cut by their anti-diagonal, the others by the main diagonal.
Vec2 c2_half_centroid(std::int64_t i, std::int64_t j, bool right_half) {
  const bool anti = mod(i + j, 2) == 1;
  const RingScalar third(1, 0, 3), two_thirds(2, 0, 3);
  RingScalar cx = RingScalar(i) + (right_half ? two_thirds : third);
  RingScalar cy = RingScalar(j) + ((anti == right_half) ? two_thirds : third);
  return {cx, cy};
}

// Row r >= 1 counted from the bottom of the hull, position p >= 1 counted
// from its left edge. Row 1 starts with u (the upper half of the square at
// i = 1); every higher row starts one square further right.
Chamber c2_at(const Tessellation& c2, std::int64_t row, std::int64_t position) {
  const std::int64_t half_index = row == 1 ? position : 2 * row - 4 + position;
  const std::int64_t square = (half_index >= 0 ? half_index / 2 : (half_index - 1) / 2) + 1;
  return c2.locate(c2_half_centroid(square, row - 1, mod(half_index, 2) == 1));
}

}  // namespace

BigInt a2_pair_count(const A2Coord& c) {
  require(c.x >= 0 && c.y >= 0, ErrorKind::ShapeViolation, "x >= 0 and y >= 0");
  const std::int64_t sum = c.x + c.y;
  if (c.base_orientation == Orientation::Up)
    require(sum > 0 && sum % 2 == 0, ErrorKind::ParityViolation, "x + y positive even for an upward base");
  else
    require(sum > 0 && sum % 2 == 1, ErrorKind::ParityViolation, "x + y positive odd for a downward base");
  require(c.x >= c.y - 1, ErrorKind::ShapeViolation, "x >= y - 1");
  return c.base_orientation == Orientation::Up ? even_count(big(c.x), big(c.y)) : odd_count(big(c.x), big(c.y));
}

InequalitySides a2_strong_hull_sides(std::int64_t x, std::int64_t y, std::int64_t a, std::int64_t b) {
  require(x >= 0 && y >= 0 && a >= 0 && b >= 0, ErrorKind::ConstraintViolation, "x, y, a, b non-negative");
  require(x >= y - 1, ErrorKind::ConstraintViolation, "x >= y - 1");
  require(a >= b - 1, ErrorKind::ConstraintViolation, "a >= b - 1");
  require(x + y > 0 && (x + y) % 2 == 1, ErrorKind::ConstraintViolation, "x + y positive odd");
  require(a + b > 0 && (a + b) % 2 == 0, ErrorKind::ConstraintViolation, "a + b positive even");
  return {odd_count(big(x), big(y)) * even_count(big(a), big(b)), odd_count(big(x + a), big(y + b))};
}

C2Counts c2_case2_counts(const C2CaseParams& p) {
  require_case2_base(p);
  require(p.y >= p.b + 2, ErrorKind::ConstraintViolation, "y >= b + 2");
  const BigInt a = big(p.a), b = big(p.b), x = big(p.x), y = big(p.y);
  // Conv(v, w) by rows: bottom, middle, second from top, top. This is one more
  // than 3(x-a+3) + (y-b-2)(x-a+5), which the inequality below keeps.
  const BigInt d = x - a;
  return {2 * a + (b - 2) * (a + 2), (d + 4) + (y - b - 2) * (d + 5) + (d + 4) + (d + 2),
          3 * (x + 1) + (y - 3) * (x + 3)};
}

InequalitySides c2_case2_sides(const C2CaseParams& p) {
  require_case2_base(p);
  const BigInt a = big(p.a), b = big(p.b), x = big(p.x), y = big(p.y);
  return {(2 * a + (b - 2) * (a + 2)) * (3 * (x - a + 3) + (y - b - 2) * (x - a + 5)),
          3 * (x + 1) + (y - 3) * (x + 3)};
}

BigInt dihedral_pair_count(std::int64_t dist) {
  require(dist >= 0, ErrorKind::ConstraintViolation, "distance >= 0");
  return big(dist) + 1;
}

ChamberPair a2_chamber_pair(const Tessellation& a2, const A2Coord& c) {
  if (a2.tag() != TypeTag::A2Tilde) throw Error(ErrorKind::MixedContext, "a2t coordinates need an a2t tessellation");
  const Vec2 u_center = c.base_orientation == Orientation::Up ? Vec2{RingScalar(1, 0, 2), RingScalar(0)}
                                                               : Vec2{RingScalar(1), RingScalar(0)};
  return {a2.locate(a2_center(u_center, 0, 0)), a2.locate(a2_center(u_center, c.x, c.y))};
}

ChamberTriple a2_triple(const Tessellation& a2, std::int64_t x, std::int64_t y, std::int64_t a, std::int64_t b) {
  auto [u, v] = a2_chamber_pair(a2, {x, y, Orientation::Down});
  auto [u2, w] = a2_chamber_pair(a2, {x + a, y + b, Orientation::Down});
  return {u, v, w};
}

ChamberTriple c2_case2_triple(const Tessellation& c2, const C2CaseParams& p) {
  if (c2.tag() != TypeTag::C2Tilde) throw Error(ErrorKind::MixedContext, "c2t case parameters need a c2t tessellation");
  return {c2_at(c2, 1, 1), c2_at(c2, p.b, p.a), c2_at(c2, p.y, p.x)};
}

Chamber dihedral_cell(const Tessellation& i2, std::int64_t n) {
  if (i2.tag() != TypeTag::I2Infinity) throw Error(ErrorKind::MixedContext, "line cells need an i2inf tessellation");
  return i2.locate({RingScalar(2 * n + 1, 0, 2), RingScalar(0)});
}

}  // namespace coxhull
