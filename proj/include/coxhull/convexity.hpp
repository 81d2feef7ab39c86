#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxhull/tessellation.hpp"

namespace coxhull {

// Finite set of chambers in canonical (key) order.
class ChamberSet {
 public:
  ChamberSet() = default;
  explicit ChamberSet(std::vector<Chamber> chambers);

  std::size_t size() const { return chambers_.size(); }
  bool empty() const { return chambers_.empty(); }
  bool contains(const Chamber& c) const;
  bool is_subset_of(const ChamberSet& other) const;

  auto begin() const { return chambers_.begin(); }
  auto end() const { return chambers_.end(); }
  const std::vector<Chamber>& chambers() const { return chambers_; }

  friend bool operator==(const ChamberSet& a, const ChamberSet& b) { return a.chambers_ == b.chambers_; }

 private:
  std::vector<Chamber> chambers_;
};

struct HullVerdict {
  std::int64_t size_uv = 0;
  std::int64_t size_vw = 0;
  std::int64_t size_uvw = 0;
  std::int64_t product = 0;
  bool holds = false;
};

std::int64_t distance(const Tessellation& t, const Chamber& u, const Chamber& v);

// Lowest generator first at every step.
Gallery minimal_gallery(const Tessellation& t, const Chamber& u, const Chamber& v);

// Walls crossed by consecutive chambers of `g`, in crossing order.
std::vector<Wall> crossed_walls(const Tessellation& t, const Gallery& g);

// {c : d(u, c) + d(c, v) = d(u, v)}
ChamberSet interval(const Tessellation& t, const Chamber& u, const Chamber& v);

// Chambers on the same side as all of `points` of every wall that has all of
// them on one side. Flood-filled from points[0].
ChamberSet halfspace_hull(const Tessellation& t, std::span<const Chamber> points);
// Same set, flood-filled from an arbitrary seed inside it.
ChamberSet halfspace_hull_from(const Tessellation& t, std::span<const Chamber> points, const Chamber& seed);
std::size_t halfspace_hull_size(const Tessellation& t, std::span<const Chamber> points);

// Least superset of `points` closed under intervals.
ChamberSet closure_hull(const Tessellation& t, std::span<const Chamber> points);

// Throws Error{HullDiscrepancy} describing the symmetric difference if the
// two hull algorithms disagree; returns the common hull otherwise.
ChamberSet cross_checked_hull(const Tessellation& t, std::span<const Chamber> points);

HullVerdict strong_hull_check(const Tessellation& t, const Chamber& u, const Chamber& v, const Chamber& w);

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

struct Counterexample {
  std::string v;
  std::string w;
  HullVerdict verdict;
};

struct CheckReport {
  TypeTag type = TypeTag::Unsupported;
  int radius = 0;
  std::uint64_t triples_checked = 0;
  std::vector<Counterexample> counterexamples;
  // max over triples of |Conv(u,v,w)| / (|Conv(u,v)| |Conv(v,w)|), reduced.
  Fraction max_ratio;
  std::int64_t wall_clock_ms = 0;

  nlohmann::json to_json() const;
};

// Checks the strong hull inequality for (identity, v, w) over all v, w of
// length <= radius. The report does not depend on `jobs`.
CheckReport sweep_triples(const Tessellation& t, int radius, int jobs = 1);

struct CoarseningDiagnostic {
  std::int64_t coarse_hull_size = 0;  // |Conv_A2| of the coarsened triple
  std::int64_t scaled_coarse_size = 0;  // multiplicity * coarse_hull_size
  std::int64_t fine_hull_size = 0;  // |Conv_G2| of the original triple
  bool holds = false;  // scaled_coarse_size >= fine_hull_size
};

CoarseningDiagnostic g2_diagnostic(const Coarsening& coarsening, const Chamber& u1, const Chamber& v,
                                   const Chamber& w1);

}  // namespace coxhull
