#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace coxhull {

// Exact element (p + q*sqrt(3)) / d of the field Q(sqrt 3).
//
// Stored in canonical form: d > 0 and gcd(p, q, d) = 1, so two scalars are
// equal iff their triples are equal. Arithmetic is on 64-bit integers with
// overflow detection; an overflow throws std::overflow_error rather than
// wrapping.
class RingScalar {
 public:
  constexpr RingScalar() = default;
  RingScalar(std::int64_t p, std::int64_t q = 0, std::int64_t d = 1);

  static RingScalar sqrt3() { return RingScalar(0, 1, 1); }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::int64_t d() const { return d_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }
  bool is_rational() const { return q_ == 0; }
  bool is_integer() const { return q_ == 0 && d_ == 1; }

  // Exact sign in {-1, 0, +1}.
  int sign() const;

  RingScalar operator-() const;
  RingScalar& operator+=(const RingScalar& o);
  RingScalar& operator-=(const RingScalar& o);
  RingScalar& operator*=(const RingScalar& o);
  RingScalar& operator/=(const RingScalar& o);

  friend RingScalar operator+(RingScalar a, const RingScalar& b) { return a += b; }
  friend RingScalar operator-(RingScalar a, const RingScalar& b) { return a -= b; }
  friend RingScalar operator*(RingScalar a, const RingScalar& b) { return a *= b; }
  friend RingScalar operator/(RingScalar a, const RingScalar& b) { return a /= b; }

  RingScalar inverse() const;

  // Largest integer k with k <= *this, decided exactly.
  std::int64_t floor() const;

  double to_double() const;

  friend bool operator==(const RingScalar&, const RingScalar&) = default;
  // Numeric (not lexicographic) order.
  friend std::strong_ordering operator<=>(const RingScalar& a, const RingScalar& b);

  std::string to_string() const;

 private:
  void normalize();

  std::int64_t p_ = 0;
  std::int64_t q_ = 0;
  std::int64_t d_ = 1;
};

std::ostream& operator<<(std::ostream& os, const RingScalar& s);

struct Vec2 {
  RingScalar x;
  RingScalar y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const RingScalar& s, const Vec2& v) { return {s * v.x, s * v.y}; }
};

inline RingScalar dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

std::size_t hash_value(const RingScalar& s);

}  // namespace coxhull
