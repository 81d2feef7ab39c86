#pragma once

// Oracles and generators shared by the unit and acceptance tests. Everything
// here uses only the adjacency structure (Tessellation::neighbor), never the
// wall arithmetic, so it can stand in judgement over the latter.

#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "coxhull/convexity.hpp"

namespace coxhull::oracle {

using DistanceMap = std::unordered_map<ChamberKey, int, ChamberKeyHash>;

struct Bfs {
  std::vector<Chamber> order;
  DistanceMap dist;
};

// Breadth-first search in the chamber graph from `source` up to `radius`.
inline Bfs bfs(const Tessellation& t, const Chamber& source, int radius) {
  Bfs out;
  out.order.push_back(source);
  out.dist.emplace(source.key, 0);
  for (std::size_t head = 0; head < out.order.size(); ++head) {
    const int d = out.dist.at(out.order[head].key);
    if (d == radius) continue;
    for (std::size_t i = 0; i < t.rank(); ++i) {
      Chamber n = t.neighbor(out.order[head], static_cast<int>(i));
      if (out.dist.emplace(n.key, d + 1).second) out.order.push_back(std::move(n));
    }
  }
  return out;
}

// BFS distance between two chambers known to be within `limit` of each other.
inline int bfs_distance(const Tessellation& t, const Chamber& a, const Chamber& b, int limit = 64) {
  const Bfs r = bfs(t, a, limit);
  auto it = r.dist.find(b.key);
  return it == r.dist.end() ? -1 : it->second;
}

// {c : d(u,c) + d(c,v) = d(u,v)} with every distance taken from BFS.
inline ChamberSet bfs_interval(const Tessellation& t, const Chamber& u, const Chamber& v) {
  const Bfs from_u = bfs(t, u, 64);
  const int d = from_u.dist.at(v.key);
  const Bfs from_v = bfs(t, v, d);
  std::vector<Chamber> out;
  for (const auto& c : from_v.order) {
    auto it = from_u.dist.find(c.key);
    if (it != from_u.dist.end() && it->second + from_v.dist.at(c.key) == d) out.push_back(c);
  }
  return ChamberSet(std::move(out));
}

inline std::vector<int> random_word(std::mt19937_64& rng, std::size_t rank, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> gen(0, static_cast<int>(rank) - 1);
  std::vector<int> w(static_cast<std::size_t>(len(rng)));
  for (auto& g : w) g = gen(rng);
  return w;
}

inline Chamber random_chamber(const Tessellation& t, std::mt19937_64& rng, int max_length) {
  return t.from_word(random_word(rng, t.rank(), max_length));
}

// g applied to every chamber of `cs`.
inline std::vector<Chamber> translate(const Tessellation& t, const GroupElement& g, const std::vector<Chamber>& cs) {
  std::vector<Chamber> out;
  for (const auto& c : cs) out.push_back(t.element_to_chamber(compose(g, c.element)));
  return out;
}

inline const std::vector<TypeTag> kAllTypes{TypeTag::A2Tilde, TypeTag::C2Tilde, TypeTag::G2Tilde,
                                            TypeTag::I2Infinity};
inline const std::vector<TypeTag> kPlanarTypes{TypeTag::A2Tilde, TypeTag::C2Tilde, TypeTag::G2Tilde};

}  // namespace coxhull::oracle
