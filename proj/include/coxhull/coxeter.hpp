#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "coxhull/ring.hpp"

namespace coxhull {

inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

// Validated Coxeter matrix: unit diagonal, symmetric, off-diagonal orders >= 2.
class CoxeterMatrix {
 public:
  std::size_t rank() const { return entries_.size(); }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  friend CoxeterMatrix validate_matrix(const std::vector<std::vector<int>>& raw);
  std::vector<std::vector<int>> entries_;
};

// Throws Error{NotSquare | BadDiagonal | NonSymmetric | OrderBelowTwo}.
CoxeterMatrix validate_matrix(const std::vector<std::vector<int>>& raw);

// JSON arrays of integers, with the string "inf" standing for an infinite order.
CoxeterMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const CoxeterMatrix& m);

enum class TypeTag { A2Tilde, C2Tilde, G2Tilde, I2Infinity, Unsupported };

TypeTag classify(const CoxeterMatrix& m);

// "a2t", "c2t", "g2t", "i2inf"; Unsupported serializes as "unsupported".
std::string_view tag_name(TypeTag tag);
std::optional<TypeTag> parse_tag(std::string_view name);

// The matrix our realization of `tag` uses, generators in our labeling.
CoxeterMatrix standard_matrix(TypeTag tag);

// Planar affine isometry x -> L x + t over Q(sqrt 3), tagged with the group it
// belongs to. Elements of different groups never compose.
class GroupElement {
 public:
  using Matrix = std::array<std::array<RingScalar, 2>, 2>;

  GroupElement() = default;
  GroupElement(TypeTag tag, const Matrix& linear, const Vec2& translation)
      : tag_(tag), linear_(linear), translation_(translation) {}

  static GroupElement identity(TypeTag tag);

  // Reflection across the line {p : normal . p = offset}.
  static GroupElement reflection(TypeTag tag, const Vec2& normal, const RingScalar& offset);

  TypeTag tag() const { return tag_; }
  const Matrix& linear() const { return linear_; }
  const Vec2& translation() const { return translation_; }

  Vec2 apply(const Vec2& p) const;
  Vec2 apply_linear(const Vec2& v) const;
  RingScalar determinant() const;
  bool is_identity() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  TypeTag tag_ = TypeTag::Unsupported;
  Matrix linear_{};
  Vec2 translation_{};
};

// a then b applied on the right: compose(a, b)(x) = a(b(x)). Throws MixedContext.
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
bool equals(const GroupElement& a, const GroupElement& b);

// Order of g, found by iterated composition; nullopt if it exceeds `limit`.
std::optional<int> element_order(const GroupElement& g, int limit = 64);

// Generators plus the base chamber for one supported type. Immutable; safe to
// share across threads.
struct GroupContext {
  TypeTag tag = TypeTag::Unsupported;
  CoxeterMatrix matrix;
  std::vector<GroupElement> generators;
  // Triangle vertices (segment end points for I2Infinity, placed on the x axis).
  std::vector<Vec2> base_vertices;
  Vec2 base_barycenter;

  std::size_t rank() const { return generators.size(); }
  GroupElement identity() const { return GroupElement::identity(tag); }
  // Product s_{w[0]} s_{w[1]} ... for 0-based generator indices.
  GroupElement evaluate(const std::vector<int>& word) const;
};

// Throws Error{UnsupportedType}.
GroupContext build_group(TypeTag tag);
// Same group, generators relabeled to follow `m`'s labeling.
GroupContext build_group(const CoxeterMatrix& m);

}  // namespace coxhull
