#include "coxhull/convexity.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "coxhull/error.hpp"

namespace coxhull {

namespace {

using KeySet = std::unordered_set<ChamberKey, ChamberKeyHash>;

// Per family, the chambers on the points' side of every wall with all points
// on one side are exactly those whose key lies in [min, max] of the points'
// keys: wall k of a family has all points on one side iff k <= min or k > max.
struct KeyBox {
  ChamberKey lo{};
  ChamberKey hi{};

  KeyBox(std::size_t families, std::span<const Chamber> points) {
    for (std::size_t j = 0; j < families; ++j) {
      lo[j] = hi[j] = points.front().key[j];
      for (const auto& p : points) {
        lo[j] = std::min(lo[j], p.key[j]);
        hi[j] = std::max(hi[j], p.key[j]);
      }
    }
  }

  bool contains(const ChamberKey& k) const {
    for (std::size_t j = 0; j < kMaxFamilies; ++j)
      if (k[j] < lo[j] || k[j] > hi[j]) return false;
    return true;
  }
};

template <typename Accept, typename Visit>
void flood(const Tessellation& t, const Chamber& seed, Accept accept, Visit visit) {
  KeySet seen{seed.key};
  std::vector<Chamber> stack{seed};
  while (!stack.empty()) {
    Chamber c = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i < t.rank(); ++i) {
      Chamber n = t.neighbor(c, static_cast<int>(i));
      if (seen.count(n.key) || !accept(n)) continue;
      seen.insert(n.key);
      stack.push_back(std::move(n));
    }
    visit(std::move(c));
  }
}

void require_points(std::span<const Chamber> points) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point list");
}

std::string describe(const Tessellation& t, const std::vector<Chamber>& cs) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < cs.size(); ++i) os << (i ? ", " : "") << '"' << t.word_string(cs[i]) << '"';
  os << "]";
  return os.str();
}

}  // namespace

ChamberSet::ChamberSet(std::vector<Chamber> chambers) : chambers_(std::move(chambers)) {
  std::sort(chambers_.begin(), chambers_.end());
  chambers_.erase(std::unique(chambers_.begin(), chambers_.end()), chambers_.end());
}

bool ChamberSet::contains(const Chamber& c) const {
  return std::binary_search(chambers_.begin(), chambers_.end(), c);
}

bool ChamberSet::is_subset_of(const ChamberSet& other) const {
  return std::includes(other.chambers_.begin(), other.chambers_.end(), chambers_.begin(), chambers_.end());
}

std::int64_t distance(const Tessellation& t, const Chamber& u, const Chamber& v) { return t.separation_count(u, v); }

Gallery minimal_gallery(const Tessellation& t, const Chamber& u, const Chamber& v) {
  Gallery g{u};
  std::int64_t left = distance(t, u, v);
  while (left > 0) {
    bool moved = false;
    for (std::size_t i = 0; i < t.rank() && !moved; ++i) {
      Chamber n = t.neighbor(g.back(), static_cast<int>(i));
      if (distance(t, n, v) < left) {
        g.push_back(std::move(n));
        --left;
        moved = true;
      }
    }
    if (!moved) throw std::logic_error("minimal_gallery: no neighbor is closer to the target");
  }
  return g;
}

std::vector<Wall> crossed_walls(const Tessellation& t, const Gallery& g) {
  std::vector<Wall> out;
  for (std::size_t i = 1; i < g.size(); ++i) {
    auto ws = t.separating_walls(g[i - 1], g[i]);
    if (ws.size() != 1) throw std::logic_error("crossed_walls: consecutive chambers are not adjacent");
    out.push_back(ws.front());
  }
  return out;
}

ChamberSet interval(const Tessellation& t, const Chamber& u, const Chamber& v) {
  const std::int64_t d = distance(t, u, v);
  std::vector<Chamber> out;
  flood(
      t, u, [&](const Chamber& c) { return distance(t, u, c) + distance(t, c, v) == d; },
      [&](Chamber c) { out.push_back(std::move(c)); });
  return ChamberSet(std::move(out));
}

ChamberSet halfspace_hull_from(const Tessellation& t, std::span<const Chamber> points, const Chamber& seed) {
  require_points(points);
  const KeyBox box(t.families().size(), points);
  if (!box.contains(seed.key)) throw std::invalid_argument("halfspace_hull_from: seed outside the hull");
  std::vector<Chamber> out;
  flood(
      t, seed, [&](const Chamber& c) { return box.contains(c.key); }, [&](Chamber c) { out.push_back(std::move(c)); });
  return ChamberSet(std::move(out));
}

ChamberSet halfspace_hull(const Tessellation& t, std::span<const Chamber> points) {
  require_points(points);
  return halfspace_hull_from(t, points, points.front());
}

std::size_t halfspace_hull_size(const Tessellation& t, std::span<const Chamber> points) {
  require_points(points);
  const KeyBox box(t.families().size(), points);
  std::size_t n = 0;
  flood(
      t, points.front(), [&](const Chamber& c) { return box.contains(c.key); }, [&](Chamber) { ++n; });
  return n;
}

ChamberSet closure_hull(const Tessellation& t, std::span<const Chamber> points) {
  require_points(points);
  std::vector<Chamber> members;
  KeySet in_set;
  auto add = [&](const Chamber& c) {
    if (in_set.insert(c.key).second) members.push_back(c);
  };
  for (const auto& p : points) add(p);
  // members[0, done) are pairwise joined; each new member is joined with all earlier ones.
  for (std::size_t done = 0; done < members.size(); ++done) {
    const Chamber a = members[done];
    for (std::size_t b = 0; b < done; ++b) {
      const Chamber cb = members[b];
      for (const auto& c : interval(t, a, cb)) add(c);
    }
  }
  return ChamberSet(std::move(members));
}

ChamberSet cross_checked_hull(const Tessellation& t, std::span<const Chamber> points) {
  ChamberSet by_walls = halfspace_hull(t, points);
  ChamberSet by_closure = closure_hull(t, points);
  if (by_walls == by_closure) return by_walls;
  std::vector<Chamber> only_walls, only_closure;
  std::set_difference(by_walls.begin(), by_walls.end(), by_closure.begin(), by_closure.end(),
                      std::back_inserter(only_walls));
  std::set_difference(by_closure.begin(), by_closure.end(), by_walls.begin(), by_walls.end(),
                      std::back_inserter(only_closure));
  std::vector<Chamber> pts(points.begin(), points.end());
  throw Error(ErrorKind::HullDiscrepancy,
              std::string(tag_name(t.tag())) + " points " + describe(t, pts) + ": halfspace hull has " +
                  std::to_string(by_walls.size()) + " chambers, closure hull has " +
                  std::to_string(by_closure.size()) + "; only in halfspace " + describe(t, only_walls) +
                  "; only in closure " + describe(t, only_closure));
}

HullVerdict strong_hull_check(const Tessellation& t, const Chamber& u, const Chamber& v, const Chamber& w) {
  HullVerdict r;
  const Chamber uv[] = {u, v};
  const Chamber vw[] = {v, w};
  const Chamber uvw[] = {u, v, w};
  r.size_uv = static_cast<std::int64_t>(halfspace_hull_size(t, uv));
  r.size_vw = static_cast<std::int64_t>(halfspace_hull_size(t, vw));
  r.size_uvw = static_cast<std::int64_t>(halfspace_hull_size(t, uvw));
  r.product = r.size_uv * r.size_vw;
  r.holds = r.product >= r.size_uvw;
  return r;
}

// ---------------------------------------------------------------------------

nlohmann::json CheckReport::to_json() const {
  nlohmann::json ces = nlohmann::json::array();
  for (const auto& c : counterexamples) {
    ces.push_back({{"u", ""},
                   {"v", c.v},
                   {"w", c.w},
                   {"size_uv", c.verdict.size_uv},
                   {"size_vw", c.verdict.size_vw},
                   {"size_uvw", c.verdict.size_uvw}});
  }
  nlohmann::json j;
  j["type"] = std::string(tag_name(type));
  j["radius"] = radius;
  j["triples_checked"] = triples_checked;
  j["counterexamples"] = ces;
  j["max_ratio"] = {{"num", max_ratio.num}, {"den", max_ratio.den}};
  j["wall_clock_ms"] = wall_clock_ms;
  return j;
}

CheckReport sweep_triples(const Tessellation& t, int radius, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Chamber> ball = t.ball(radius);
  const Chamber u = t.chamber_of_identity();

  struct Row {
    std::vector<Counterexample> counterexamples;
    Fraction max_ratio{0, 1};
  };
  std::vector<Row> rows(ball.size());
  std::vector<std::int64_t> size_u(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Chamber uv[] = {u, ball[i]};
    size_u[i] = static_cast<std::int64_t>(halfspace_hull_size(t, uv));
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ball.size(); i = next++) {
      const Chamber& v = ball[i];
      Row& row = rows[i];
      for (const Chamber& w : ball) {
        const Chamber vw[] = {v, w};
        const Chamber uvw[] = {u, v, w};
        HullVerdict r;
        r.size_uv = size_u[i];
        r.size_vw = static_cast<std::int64_t>(halfspace_hull_size(t, vw));
        r.size_uvw = static_cast<std::int64_t>(halfspace_hull_size(t, uvw));
        r.product = r.size_uv * r.size_vw;
        r.holds = r.product >= r.size_uvw;
        if (!r.holds) row.counterexamples.push_back({t.word_string(v), t.word_string(w), r});
        // ratio size_uvw / product against the running max num / den
        if (r.size_uvw * row.max_ratio.den > row.max_ratio.num * r.product) row.max_ratio = {r.size_uvw, r.product};
      }
    }
  };
  const int n_threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int k = 1; k < n_threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  CheckReport report;
  report.type = t.tag();
  report.radius = radius;
  report.triples_checked = static_cast<std::uint64_t>(ball.size()) * ball.size();
  for (auto& row : rows) {
    for (auto& c : row.counterexamples) report.counterexamples.push_back(std::move(c));
    if (row.max_ratio.num * report.max_ratio.den > report.max_ratio.num * row.max_ratio.den)
      report.max_ratio = row.max_ratio;
  }
  const std::int64_t g = std::gcd(report.max_ratio.num, report.max_ratio.den);
  if (g > 1) report.max_ratio = {report.max_ratio.num / g, report.max_ratio.den / g};
  report.wall_clock_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CoarseningDiagnostic g2_diagnostic(const Coarsening& coarsening, const Chamber& u1, const Chamber& v,
                                   const Chamber& w1) {
  const Chamber fine[] = {u1, v, w1};
  const Chamber coarse[] = {coarsening.coarsen(u1), coarsening.coarsen(v), coarsening.coarsen(w1)};
  CoarseningDiagnostic d;
  d.coarse_hull_size = static_cast<std::int64_t>(halfspace_hull_size(coarsening.coarse(), coarse));
  d.scaled_coarse_size = coarsening.multiplicity() * d.coarse_hull_size;
  d.fine_hull_size = static_cast<std::int64_t>(halfspace_hull_size(coarsening.fine(), fine));
  d.holds = d.scaled_coarse_size >= d.fine_hull_size;
  return d;
}

}  // namespace coxhull
