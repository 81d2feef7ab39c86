#include "coxhull/tessellation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "coxhull/error.hpp"

namespace coxhull {

namespace {

// Line {p : normal . p = offset}, normal scaled so its leading nonzero coordinate is 1.
struct Line {
  Vec2 normal;
  RingScalar offset;
};

Line canonical(const Vec2& normal, const RingScalar& offset) {
  const RingScalar lead = normal.x.is_zero() ? normal.y : normal.x;
  const RingScalar inv = lead.inverse();
  return {inv * normal, inv * offset};
}

using LineKey = std::array<std::int64_t, 9>;

LineKey key_of(const Line& l) {
  return {l.normal.x.p(), l.normal.x.q(), l.normal.x.d(), l.normal.y.p(), l.normal.y.q(),
          l.normal.y.d(), l.offset.p(),   l.offset.q(),   l.offset.d()};
}

Line fixed_line(const GroupElement& reflection) {
  const auto& l = reflection.linear();
  // Columns of I - L are multiples of the normal.
  Vec2 c0{RingScalar(1) - l[0][0], -l[1][0]};
  Vec2 c1{-l[0][1], RingScalar(1) - l[1][1]};
  Vec2 normal = (c0.x.is_zero() && c0.y.is_zero()) ? c1 : c0;
  return canonical(normal, dot(normal, reflection.translation()) * RingScalar(1, 0, 2));
}

Line image(const GroupElement& g, const Line& line) {
  Vec2 n = g.apply_linear(line.normal);
  return canonical(n, line.offset + dot(n, g.translation()));
}

bool vec_less(const Vec2& a, const Vec2& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

// Closure radius for wall derivation; every family repeats well inside it.
constexpr std::int64_t kClosureRadius = 6;

}  // namespace

std::size_t ChamberKeyHash::operator()(const ChamberKey& k) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (std::int64_t v : k) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Tessellation::Tessellation(GroupContext group) : group_(std::move(group)) {
  if (group_.tag == TypeTag::Unsupported) throw Error(ErrorKind::UnsupportedType, "unsupported Coxeter type");

  // Close the base walls under the generating reflections, within a disc.
  std::map<LineKey, Line> seen;
  std::deque<Line> frontier;
  const RingScalar bound2(kClosureRadius * kClosureRadius);
  auto admit = [&](const Line& l) {
    if (l.offset * l.offset > bound2 * dot(l.normal, l.normal)) return;
    if (seen.emplace(key_of(l), l).second) frontier.push_back(l);
  };
  for (const auto& s : group_.generators) admit(fixed_line(s));
  while (!frontier.empty()) {
    Line l = frontier.front();
    frontier.pop_front();
    for (const auto& s : group_.generators) admit(image(s, l));
  }

  // Group parallel lines into families.
  std::vector<std::pair<Vec2, std::vector<RingScalar>>> groups;
  for (const auto& [k, l] : seen) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == l.normal; });
    if (it == groups.end()) groups.push_back({l.normal, {l.offset}});
    else it->second.push_back(l.offset);
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return vec_less(a.first, b.first); });
  if (groups.size() > kMaxFamilies) throw std::logic_error("Tessellation: too many wall families");

  for (const auto& [normal, offsets] : groups) {
    RingScalar spacing;
    bool has_zero = false;
    for (const auto& o : offsets) {
      if (o.is_zero()) has_zero = true;
      else if (o.sign() > 0 && (spacing.is_zero() || o < spacing)) spacing = o;
    }
    if (!has_zero || spacing.is_zero())
      throw std::logic_error("Tessellation: wall family without a wall through the origin");
    for (const auto& o : offsets)
      if (!(o / spacing).is_integer()) throw std::logic_error("Tessellation: irregular wall spacing");
    families_.push_back({normal, spacing, spacing.inverse() * normal});
  }

  for (const auto& s : group_.generators) neighbor_barycenters_.push_back(s.apply(group_.base_barycenter));
}

ChamberKey Tessellation::key_for(const Vec2& p) const {
  ChamberKey key{};
  for (std::size_t j = 0; j < families_.size(); ++j) {
    RingScalar t = dot(families_[j].projector, p);
    if (t.is_integer()) throw std::invalid_argument("point lies on a wall");
    key[j] = t.floor();
  }
  return key;
}

ChamberKey Tessellation::key_of_point(const Vec2& point) const { return key_for(point); }

Chamber Tessellation::make_chamber(GroupElement element, Vec2 barycenter) const {
  Chamber c;
  c.key = key_for(barycenter);
  c.element = std::move(element);
  c.barycenter = std::move(barycenter);
  return c;
}

Chamber Tessellation::chamber_of_identity() const {
  return make_chamber(group_.identity(), group_.base_barycenter);
}

Chamber Tessellation::element_to_chamber(const GroupElement& w) const {
  if (w.tag() != group_.tag)
    throw Error(ErrorKind::MixedContext, "element does not belong to this tessellation's group");
  return make_chamber(w, w.apply(group_.base_barycenter));
}

Chamber Tessellation::neighbor(const Chamber& c, int generator) const {
  const auto g = static_cast<std::size_t>(generator);
  return make_chamber(compose(c.element, group_.generators.at(g)), c.element.apply(neighbor_barycenters_.at(g)));
}

std::vector<std::pair<int, Chamber>> Tessellation::neighbors(const Chamber& c) const {
  std::vector<std::pair<int, Chamber>> out;
  out.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) out.emplace_back(static_cast<int>(i), neighbor(c, static_cast<int>(i)));
  return out;
}

int Tessellation::side(const Wall& wall, const Vec2& point) const {
  const auto& f = families_.at(static_cast<std::size_t>(wall.family));
  return (dot(f.projector, point) - RingScalar(wall.offset)).sign();
}

bool Tessellation::separates(const Wall& wall, const Chamber& a, const Chamber& b) const {
  return side(wall, a.barycenter) != side(wall, b.barycenter);
}

std::vector<Wall> Tessellation::separating_walls(const Chamber& a, const Chamber& b) const {
  std::vector<Wall> out;
  for (std::size_t j = 0; j < families_.size(); ++j) {
    auto [lo, hi] = std::minmax(a.key[j], b.key[j]);
    for (std::int64_t k = lo + 1; k <= hi; ++k) out.push_back({static_cast<int>(j), k});
  }
  return out;
}

std::int64_t Tessellation::separation_count(const Chamber& a, const Chamber& b) const {
  std::int64_t n = 0;
  for (std::size_t j = 0; j < families_.size(); ++j) n += a.key[j] > b.key[j] ? a.key[j] - b.key[j] : b.key[j] - a.key[j];
  return n;
}

Wall Tessellation::panel_wall(const Chamber& c, int generator) const {
  Chamber n = neighbor(c, generator);
  for (std::size_t j = 0; j < families_.size(); ++j)
    if (n.key[j] != c.key[j]) return {static_cast<int>(j), std::max(n.key[j], c.key[j])};
  throw std::logic_error("Tessellation: neighbor shares the chamber's key");
}

GroupElement Tessellation::reflection(const Wall& wall) const {
  const auto& f = families_.at(static_cast<std::size_t>(wall.family));
  return GroupElement::reflection(group_.tag, f.normal, RingScalar(wall.offset) * f.spacing);
}

Chamber Tessellation::locate(const Vec2& point) const {
  const ChamberKey target = key_for(point);
  auto remaining = [&](const ChamberKey& k) {
    std::int64_t n = 0;
    for (std::size_t j = 0; j < families_.size(); ++j) n += k[j] > target[j] ? k[j] - target[j] : target[j] - k[j];
    return n;
  };
  Chamber cur = chamber_of_identity();
  std::int64_t left = remaining(cur.key);
  while (left > 0) {
    bool moved = false;
    for (std::size_t i = 0; i < rank() && !moved; ++i) {
      Chamber n = neighbor(cur, static_cast<int>(i));
      if (remaining(n.key) < left) {
        cur = std::move(n);
        --left;
        moved = true;
      }
    }
    if (!moved) throw std::logic_error("Tessellation::locate: no panel separates the chamber from the target");
  }
  return cur;
}

std::vector<int> Tessellation::parse_word(std::string_view digits) const {
  std::vector<int> word;
  for (char ch : digits) {
    if (ch < '1' || ch > '9' || static_cast<std::size_t>(ch - '0') > rank())
      throw Error(ErrorKind::ParseError, std::string("invalid generator '") + ch + "' in word \"" +
                                             std::string(digits) + "\" (expected digits 1.." +
                                             std::to_string(rank()) + ")");
    word.push_back(ch - '1');
  }
  return word;
}

Chamber Tessellation::from_word(const std::vector<int>& word) const {
  Chamber c = chamber_of_identity();
  for (int i : word) c = neighbor(c, i);
  return c;
}

std::vector<int> Tessellation::geodesic_word(const Chamber& c) const {
  std::vector<int> word;
  Chamber cur = chamber_of_identity();
  std::int64_t left = separation_count(cur, c);
  while (left > 0) {
    for (std::size_t i = 0; i < rank(); ++i) {
      Chamber n = neighbor(cur, static_cast<int>(i));
      if (separation_count(n, c) < left) {
        word.push_back(static_cast<int>(i));
        cur = std::move(n);
        --left;
        break;
      }
    }
  }
  return word;
}

std::string Tessellation::word_string(const Chamber& c) const {
  std::string s;
  for (int i : geodesic_word(c)) s.push_back(static_cast<char>('1' + i));
  return s;
}

std::vector<Vec2> Tessellation::polygon(const Chamber& c) const {
  std::vector<Vec2> out;
  for (const auto& v : group_.base_vertices) out.push_back(c.element.apply(v));
  return out;
}

std::vector<Chamber> Tessellation::ball(int radius) const {
  std::vector<Chamber> out;
  std::unordered_map<ChamberKey, int, ChamberKeyHash> length;
  Chamber base = chamber_of_identity();
  length.emplace(base.key, 0);
  out.push_back(std::move(base));
  for (std::size_t head = 0; head < out.size(); ++head) {
    const int d = length.at(out[head].key);
    if (d == radius) continue;
    for (std::size_t i = 0; i < rank(); ++i) {
      Chamber n = neighbor(out[head], static_cast<int>(i));
      if (length.emplace(n.key, d + 1).second) out.push_back(std::move(n));
    }
  }
  return out;
}

nlohmann::json scalar_to_json(const RingScalar& s) { return nlohmann::json::array({s.p(), s.q(), s.d()}); }

nlohmann::json Tessellation::chamber_to_json(const Chamber& c) const {
  return {{"word", word_string(c)},
          {"barycenter", nlohmann::json::array({scalar_to_json(c.barycenter.x), scalar_to_json(c.barycenter.y)})}};
}

nlohmann::json Tessellation::wall_to_json(const Wall& w) { return {{"family", w.family}, {"offset", w.offset}}; }

// ---------------------------------------------------------------------------

Coarsening::Coarsening(const Tessellation& fine, const Tessellation& coarse) : fine_(&fine), coarse_(&coarse) {
  if (fine.tag() != TypeTag::G2Tilde || coarse.tag() != TypeTag::A2Tilde)
    throw Error(ErrorKind::MixedContext, "coarsening maps g2t chambers to a2t chambers");
  for (const auto& cf : coarse.families()) {
    bool shared = std::any_of(fine.families().begin(), fine.families().end(), [&](const WallFamily& ff) {
      return ff.normal == cf.normal && ff.spacing == cf.spacing;
    });
    if (!shared) throw Error(ErrorKind::MixedContext, "a2t wall family missing from the g2t arrangement");
  }
  multiplicity_ = static_cast<int>(preimage(coarse.chamber_of_identity(), 4).size());
}

Chamber Coarsening::coarsen(const Chamber& fine_chamber) const { return coarse_->locate(fine_chamber.barycenter); }

std::vector<Chamber> Coarsening::preimage(const Chamber& coarse_chamber, int radius) const {
  std::vector<Chamber> out;
  for (auto& c : fine_->ball(radius))
    if (coarse_->key_of_point(c.barycenter) == coarse_chamber.key) out.push_back(std::move(c));
  return out;
}

}  // namespace coxhull
