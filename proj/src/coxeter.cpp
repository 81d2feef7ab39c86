#include "coxhull/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "coxhull/error.hpp"

namespace coxhull {

namespace {

std::string cell(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

std::vector<int> off_diagonal_sorted(const CoxeterMatrix& m) {
  std::vector<int> orders;
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = i + 1; j < m.rank(); ++j) orders.push_back(m(i, j));
  std::sort(orders.begin(), orders.end());
  return orders;
}

GroupElement side_reflection(TypeTag tag, const Vec2& from, const Vec2& to) {
  Vec2 d = to - from;
  Vec2 normal{-d.y, d.x};
  return GroupElement::reflection(tag, normal, dot(normal, from));
}

}  // namespace

CoxeterMatrix validate_matrix(const std::vector<std::vector<int>>& raw) {
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i)
    if (raw[i].size() != n)
      throw Error(ErrorKind::NotSquare, "row " + std::to_string(i) + " has " + std::to_string(raw[i].size()) +
                                            " entries, expected " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    if (raw[i][i] != 1) throw Error(ErrorKind::BadDiagonal, "entry " + cell(i, i) + " must be 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (raw[i][j] != raw[j][i])
        throw Error(ErrorKind::NonSymmetric, "entries " + cell(i, j) + " and " + cell(j, i) + " differ");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && raw[i][j] < 2)
        throw Error(ErrorKind::OrderBelowTwo, "entry " + cell(i, j) + " is " + std::to_string(raw[i][j]));
  CoxeterMatrix m;
  m.entries_ = raw;
  return m;
}

CoxeterMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "Coxeter matrix must be a JSON array");
  std::vector<std::vector<int>> raw;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorKind::ParseError, "Coxeter matrix rows must be arrays");
    std::vector<int> r;
    for (const auto& e : row) {
      if (e.is_string() && e.get<std::string>() == "inf") r.push_back(kInfiniteOrder);
      else if (e.is_number_integer()) r.push_back(e.get<int>());
      else throw Error(ErrorKind::ParseError, "matrix entry must be an integer or \"inf\": " + e.dump());
    }
    raw.push_back(std::move(r));
  }
  return validate_matrix(raw);
}

nlohmann::json matrix_to_json(const CoxeterMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : m.entries()) {
    nlohmann::json r = nlohmann::json::array();
    for (int e : row) {
      if (e == kInfiniteOrder) r.push_back("inf");
      else r.push_back(e);
    }
    out.push_back(std::move(r));
  }
  return out;
}

TypeTag classify(const CoxeterMatrix& m) {
  const auto orders = off_diagonal_sorted(m);
  if (m.rank() == 2 && orders == std::vector<int>{kInfiniteOrder}) return TypeTag::I2Infinity;
  if (m.rank() != 3) return TypeTag::Unsupported;
  if (orders == std::vector<int>{3, 3, 3}) return TypeTag::A2Tilde;
  if (orders == std::vector<int>{2, 4, 4}) return TypeTag::C2Tilde;
  if (orders == std::vector<int>{2, 3, 6}) return TypeTag::G2Tilde;
  return TypeTag::Unsupported;
}

std::string_view tag_name(TypeTag tag) {
  switch (tag) {
    case TypeTag::A2Tilde: return "a2t";
    case TypeTag::C2Tilde: return "c2t";
    case TypeTag::G2Tilde: return "g2t";
    case TypeTag::I2Infinity: return "i2inf";
    case TypeTag::Unsupported: return "unsupported";
  }
  return "unsupported";
}

std::optional<TypeTag> parse_tag(std::string_view name) {
  for (TypeTag t : {TypeTag::A2Tilde, TypeTag::C2Tilde, TypeTag::G2Tilde, TypeTag::I2Infinity})
    if (tag_name(t) == name) return t;
  return std::nullopt;
}

CoxeterMatrix standard_matrix(TypeTag tag) {
  switch (tag) {
    case TypeTag::A2Tilde: return validate_matrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
    case TypeTag::C2Tilde: return validate_matrix({{1, 4, 2}, {4, 1, 4}, {2, 4, 1}});
    case TypeTag::G2Tilde: return validate_matrix({{1, 6, 2}, {6, 1, 3}, {2, 3, 1}});
    case TypeTag::I2Infinity: return validate_matrix({{1, kInfiniteOrder}, {kInfiniteOrder, 1}});
    case TypeTag::Unsupported: break;
  }
  throw Error(ErrorKind::UnsupportedType, "no standard matrix for an unsupported type");
}

// ---------------------------------------------------------------------------

GroupElement GroupElement::identity(TypeTag tag) {
  Matrix id{{{RingScalar(1), RingScalar(0)}, {RingScalar(0), RingScalar(1)}}};
  return GroupElement(tag, id, Vec2{});
}

GroupElement GroupElement::reflection(TypeTag tag, const Vec2& normal, const RingScalar& offset) {
  // p -> p - 2 (n.p - c) / |n|^2 n
  RingScalar inv_norm2 = dot(normal, normal).inverse();
  RingScalar two(2);
  Matrix l;
  l[0][0] = RingScalar(1) - two * normal.x * normal.x * inv_norm2;
  l[0][1] = -(two * normal.x * normal.y * inv_norm2);
  l[1][0] = l[0][1];
  l[1][1] = RingScalar(1) - two * normal.y * normal.y * inv_norm2;
  Vec2 t = (two * offset * inv_norm2) * normal;
  return GroupElement(tag, l, t);
}

Vec2 GroupElement::apply_linear(const Vec2& v) const {
  return {linear_[0][0] * v.x + linear_[0][1] * v.y, linear_[1][0] * v.x + linear_[1][1] * v.y};
}

Vec2 GroupElement::apply(const Vec2& p) const { return apply_linear(p) + translation_; }

RingScalar GroupElement::determinant() const {
  return linear_[0][0] * linear_[1][1] - linear_[0][1] * linear_[1][0];
}

bool GroupElement::is_identity() const { return *this == identity(tag_); }

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.tag() != b.tag())
    throw Error(ErrorKind::MixedContext, std::string("cannot compose elements of ") +
                                             std::string(tag_name(a.tag())) + " and " +
                                             std::string(tag_name(b.tag())));
  GroupElement::Matrix l;
  const auto& la = a.linear();
  const auto& lb = b.linear();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) l[i][j] = la[i][0] * lb[0][j] + la[i][1] * lb[1][j];
  return GroupElement(a.tag(), l, a.apply(b.translation()));
}

GroupElement inverse(const GroupElement& a) {
  // Orthogonal linear part: L^-1 = L^T.
  const auto& l = a.linear();
  GroupElement::Matrix lt{{{l[0][0], l[1][0]}, {l[0][1], l[1][1]}}};
  GroupElement transposed(a.tag(), lt, Vec2{});
  Vec2 t = transposed.apply_linear(a.translation());
  return GroupElement(a.tag(), lt, Vec2{-t.x, -t.y});
}

bool equals(const GroupElement& a, const GroupElement& b) { return a == b; }

std::optional<int> element_order(const GroupElement& g, int limit) {
  GroupElement acc = g;
  for (int k = 1; k <= limit; ++k) {
    if (acc.is_identity()) return k;
    acc = compose(acc, g);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

GroupElement GroupContext::evaluate(const std::vector<int>& word) const {
  GroupElement g = identity();
  for (int i : word) g = compose(g, generators.at(static_cast<std::size_t>(i)));
  return g;
}

GroupContext build_group(TypeTag tag) {
  GroupContext ctx;
  ctx.tag = tag;
  const RingScalar half(1, 0, 2);
  const RingScalar r3 = RingScalar::sqrt3();
  switch (tag) {
    case TypeTag::A2Tilde: {
      // Equilateral, unit horizontal edge at the origin.
      Vec2 o{}, a{RingScalar(1), RingScalar(0)}, b{half, half * r3};
      ctx.base_vertices = {o, a, b};
      ctx.generators = {side_reflection(tag, o, a), side_reflection(tag, a, b), side_reflection(tag, b, o)};
      break;
    }
    case TypeTag::C2Tilde: {
      // Half of the unit square cut by its main diagonal; the origin is an 8-fold vertex.
      Vec2 o{}, a{RingScalar(1), RingScalar(0)}, b{RingScalar(1), RingScalar(1)};
      ctx.base_vertices = {o, a, b};
      ctx.generators = {side_reflection(tag, o, a), side_reflection(tag, o, b), side_reflection(tag, a, b)};
      break;
    }
    case TypeTag::G2Tilde: {
      // Half of the A2 base triangle, cut by the median from the origin (a 12-fold vertex).
      Vec2 o{}, a{RingScalar(1), RingScalar(0)}, b{RingScalar(3, 0, 4), RingScalar(0, 1, 4)};
      ctx.base_vertices = {o, a, b};
      ctx.generators = {side_reflection(tag, o, b), side_reflection(tag, o, a), side_reflection(tag, a, b)};
      break;
    }
    case TypeTag::I2Infinity: {
      Vec2 o{}, a{RingScalar(1), RingScalar(0)};
      ctx.base_vertices = {o, a};
      Vec2 normal{RingScalar(1), RingScalar(0)};
      ctx.generators = {GroupElement::reflection(tag, normal, RingScalar(0)),
                        GroupElement::reflection(tag, normal, RingScalar(1))};
      break;
    }
    case TypeTag::Unsupported:
      throw Error(ErrorKind::UnsupportedType, "cannot build a group for an unsupported Coxeter matrix");
  }
  ctx.matrix = standard_matrix(tag);
  Vec2 sum{};
  for (const auto& v : ctx.base_vertices) sum = sum + v;
  ctx.base_barycenter = RingScalar(1, 0, static_cast<std::int64_t>(ctx.base_vertices.size())) * sum;
  return ctx;
}

GroupContext build_group(const CoxeterMatrix& m) {
  const TypeTag tag = classify(m);
  GroupContext standard = build_group(tag);
  std::vector<std::size_t> perm(m.rank());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < m.rank() && ok; ++i)
      for (std::size_t j = 0; j < m.rank() && ok; ++j) ok = standard.matrix(perm[i], perm[j]) == m(i, j);
    if (ok) {
      GroupContext ctx = standard;
      ctx.matrix = m;
      for (std::size_t i = 0; i < m.rank(); ++i) ctx.generators[i] = standard.generators[perm[i]];
      return ctx;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw Error(ErrorKind::UnsupportedType, "no generator relabeling matches the standard matrix");
}

}  // namespace coxhull
