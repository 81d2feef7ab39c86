#pragma once

#include <cstdint>

#include "coxhull/bigint.hpp"
#include "coxhull/tessellation.hpp"

namespace coxhull {

// Closed-form hull cardinalities for the reduced configurations, in the
// chamber coordinates of the a2t triangular grid and the c2t square grid.
//
// a2t coordinates: rows are the horizontal strips of the grid. A chamber v is
// at (x, y) relative to u when it sits y rows above u and its center is x
// half-edges to the right of u's center. Same-orientation pairs have x + y
// even, opposite-orientation pairs odd.
//
// Which base orientation each closed form belongs to is pinned by
// enumeration (see formulas_test): the even-sum count holds with u pointing
// up (and, by the half-turn symmetry, also with u pointing down), while the
// odd-sum count only holds with u pointing down. With u pointing up, (0, 1)
// is the chamber across a vertex at distance 3, not an adjacent one.

enum class Orientation { Up, Down };

struct A2Coord {
  std::int64_t x = 0;
  std::int64_t y = 0;
  Orientation base_orientation = Orientation::Up;
};

// xy + x - y^2 + y + 1 (Up, x + y positive even) or xy + x - y^2 + 2y + 1
// (Down, x + y positive odd). Throws ParityViolation / ShapeViolation
// (negative coordinate or x < y - 1).
BigInt a2_pair_count(const A2Coord& c);

struct InequalitySides {
  BigInt lhs;
  BigInt rhs;
};

// Product of the odd-sum count at (x, y) and the even-sum count at (a, b),
// against the odd-sum count at (x + a, y + b). Throws ConstraintViolation
// naming the first failed condition.
InequalitySides a2_strong_hull_sides(std::int64_t x, std::int64_t y, std::int64_t a, std::int64_t b);

// c2t reduced case: u at the left end of the bottom row of the hull, v at
// position a of row b and w at position x of row y, positions counted from
// the hull's left edge and rows from the bottom.
struct C2CaseParams {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
};

struct C2Counts {
  BigInt size_uv;
  BigInt size_vw;
  BigInt size_uvw;
};

// Row sums: 2a + (b-2)(a+2); (x-a+4) + (y-b-2)(x-a+5) + (x-a+4) + (x-a+2);
// 3(x+1) + (y-3)(x+3). The middle count equals 3(x-a+3) + (y-b-2)(x-a+5) + 1,
// one more than its commonly quoted simplification.
// Requires a = 2 mod 4, x = 1 mod 4, y > b >= 2, x >= a + 3 and y >= b + 2.
C2Counts c2_case2_counts(const C2CaseParams& p);

// Both sides of [2a + (b-2)(a+2)][3(x-a+3) + (y-b-2)(x-a+5)] >=
// 3(x+1) + (y-3)(x+3) under a = 2 mod 4, x = 1 mod 4, y > b >= 2,
// x >= a + 3. The left side undercounts size_uv * size_vw by size_uv, so the
// left side staying >= the right side implies the hull inequality.
InequalitySides c2_case2_sides(const C2CaseParams& p);

// Interval size in the infinite dihedral group: dist + 1.
BigInt dihedral_pair_count(std::int64_t dist);

// --- realizations used to cross-check the closed forms by enumeration -------

struct ChamberPair {
  Chamber u;
  Chamber v;
};

struct ChamberTriple {
  Chamber u;
  Chamber v;
  Chamber w;
};

// u with the requested orientation in the bottom row, v at (x, y) from it.
// Any integer coordinates are accepted.
ChamberPair a2_chamber_pair(const Tessellation& a2, const A2Coord& c);
// u pointing down, v at (x, y) from u, w at (a, b) from v.
ChamberTriple a2_triple(const Tessellation& a2, std::int64_t x, std::int64_t y, std::int64_t a, std::int64_t b);
// Chambers named by C2CaseParams; no congruence conditions are enforced.
ChamberTriple c2_case2_triple(const Tessellation& c2, const C2CaseParams& p);
// The cell (n, n + 1) of the line.
Chamber dihedral_cell(const Tessellation& i2, std::int64_t n);

}  // namespace coxhull
