#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coxhull/coxeter.hpp"
#include "coxhull/ring.hpp"

namespace coxhull {

inline constexpr std::size_t kMaxFamilies = 6;

// A class of parallel walls {p : normal . p = k * spacing}, k in Z.
// The normal is scaled so its leading nonzero coordinate is 1; it is unit
// length only when that is expressible in Q(sqrt 3).
struct WallFamily {
  Vec2 normal;
  RingScalar spacing;
  Vec2 projector;  // normal / spacing, so projector . p = k exactly on wall k
};

struct Wall {
  int family = 0;
  std::int64_t offset = 0;

  friend auto operator<=>(const Wall&, const Wall&) = default;
};

// For each family, the index k with k < projector . barycenter < k + 1.
// Two chambers share a key iff they are equal, since distinct chambers are
// separated by at least one wall.
using ChamberKey = std::array<std::int64_t, kMaxFamilies>;

struct ChamberKeyHash {
  std::size_t operator()(const ChamberKey& k) const noexcept;
};

struct Chamber {
  GroupElement element;
  Vec2 barycenter;
  ChamberKey key{};

  friend bool operator==(const Chamber& a, const Chamber& b) { return a.key == b.key; }
  friend bool operator<(const Chamber& a, const Chamber& b) { return a.key < b.key; }
};

using Gallery = std::vector<Chamber>;

// The Coxeter complex of one supported group realized in the plane. Wall
// families are derived at construction by closing the base chamber's walls
// under the generating reflections. Immutable after construction.
class Tessellation {
 public:
  explicit Tessellation(GroupContext group);
  static Tessellation build(TypeTag tag) { return Tessellation(build_group(tag)); }

  const GroupContext& group() const { return group_; }
  TypeTag tag() const { return group_.tag; }
  std::size_t rank() const { return group_.rank(); }
  const std::vector<WallFamily>& families() const { return families_; }

  Chamber chamber_of_identity() const;
  Chamber element_to_chamber(const GroupElement& w) const;
  Chamber neighbor(const Chamber& c, int generator) const;
  std::vector<std::pair<int, Chamber>> neighbors(const Chamber& c) const;

  // +1 or -1 for points off the wall, 0 on it.
  int side(const Wall& wall, const Vec2& point) const;
  bool separates(const Wall& wall, const Chamber& a, const Chamber& b) const;
  // Sorted by (family, offset).
  std::vector<Wall> separating_walls(const Chamber& a, const Chamber& b) const;
  // |separating_walls(a, b)| without materializing the walls.
  std::int64_t separation_count(const Chamber& a, const Chamber& b) const;
  // The wall containing the panel between c and its generator-neighbor.
  Wall panel_wall(const Chamber& c, int generator) const;
  // Reflection of the whole complex across `wall`, as a group element.
  GroupElement reflection(const Wall& wall) const;

  // Throws std::invalid_argument if the point lies on a wall.
  ChamberKey key_of_point(const Vec2& point) const;
  // The chamber whose interior contains `point`.
  Chamber locate(const Vec2& point) const;

  // Digits 1..rank, product left to right. Throws Error{ParseError}.
  std::vector<int> parse_word(std::string_view digits) const;
  Chamber from_word(const std::vector<int>& word) const;
  Chamber from_word(std::string_view digits) const { return from_word(parse_word(digits)); }
  // Canonical geodesic from the base chamber, lowest generator first.
  std::vector<int> geodesic_word(const Chamber& c) const;
  std::string word_string(const Chamber& c) const;

  // Images of the base chamber's vertices.
  std::vector<Vec2> polygon(const Chamber& c) const;

  // All chambers with length <= radius, in breadth-first order.
  std::vector<Chamber> ball(int radius) const;

  nlohmann::json chamber_to_json(const Chamber& c) const;
  static nlohmann::json wall_to_json(const Wall& w);

 private:
  ChamberKey key_for(const Vec2& barycenter) const;
  Chamber make_chamber(GroupElement element, Vec2 barycenter) const;

  GroupContext group_;
  std::vector<WallFamily> families_;
  std::vector<Vec2> neighbor_barycenters_;  // s_i applied to the base barycenter
};

nlohmann::json scalar_to_json(const RingScalar& s);

// Forgets the G2Tilde wall families absent from A2Tilde: each fine chamber
// maps to the coarse triangle containing it.
class Coarsening {
 public:
  // Throws Error{MixedContext} unless fine is G2Tilde and coarse is A2Tilde
  // with every coarse family present among the fine ones.
  Coarsening(const Tessellation& fine, const Tessellation& coarse);

  Chamber coarsen(const Chamber& fine_chamber) const;
  // Number of fine chambers inside one coarse chamber.
  int multiplicity() const { return multiplicity_; }
  // Fine chambers inside `coarse_chamber`, found by search within `radius` of
  // the fine base.
  std::vector<Chamber> preimage(const Chamber& coarse_chamber, int radius) const;

  const Tessellation& fine() const { return *fine_; }
  const Tessellation& coarse() const { return *coarse_; }

 private:
  const Tessellation* fine_;
  const Tessellation* coarse_;
  int multiplicity_ = 0;
};

}  // namespace coxhull
