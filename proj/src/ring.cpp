#include "coxhull/ring.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace coxhull {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("RingScalar: addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("RingScalar: multiplication overflow");
  return r;
}

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("RingScalar: value out of range");
  return static_cast<std::int64_t>(v);
}

}  // namespace

RingScalar::RingScalar(std::int64_t p, std::int64_t q, std::int64_t d) : p_(p), q_(q), d_(d) {
  if (d == 0) throw std::domain_error("RingScalar: zero denominator");
  normalize();
}

void RingScalar::normalize() {
  if (d_ < 0) {
    p_ = -p_;
    q_ = -q_;
    d_ = -d_;
  }
  if (p_ == 0 && q_ == 0) {
    d_ = 1;
    return;
  }
  std::int64_t g = std::gcd(std::gcd(p_, q_), d_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    d_ /= g;
  }
}

int RingScalar::sign() const {
  if (q_ == 0) return (p_ > 0) - (p_ < 0);
  if (p_ == 0) return (q_ > 0) - (q_ < 0);
  if ((p_ > 0) == (q_ > 0)) return p_ > 0 ? 1 : -1;
  // Opposite signs: compare p^2 with 3 q^2; they are never equal.
  __int128 pp = static_cast<__int128>(p_) * p_;
  __int128 qq = static_cast<__int128>(q_) * q_ * 3;
  if (p_ > 0) return pp > qq ? 1 : -1;
  return pp > qq ? -1 : 1;
}

RingScalar RingScalar::operator-() const {
  RingScalar r = *this;
  r.p_ = -r.p_;
  r.q_ = -r.q_;
  return r;
}

RingScalar& RingScalar::operator+=(const RingScalar& o) {
  if (d_ == o.d_) {
    p_ = checked_add(p_, o.p_);
    q_ = checked_add(q_, o.q_);
  } else {
    std::int64_t g = std::gcd(d_, o.d_);
    std::int64_t lhs_scale = o.d_ / g;
    std::int64_t rhs_scale = d_ / g;
    p_ = checked_add(checked_mul(p_, lhs_scale), checked_mul(o.p_, rhs_scale));
    q_ = checked_add(checked_mul(q_, lhs_scale), checked_mul(o.q_, rhs_scale));
    d_ = checked_mul(d_, lhs_scale);
  }
  normalize();
  return *this;
}

RingScalar& RingScalar::operator-=(const RingScalar& o) { return *this += -o; }

RingScalar& RingScalar::operator*=(const RingScalar& o) {
  __int128 p = static_cast<__int128>(p_) * o.p_ + static_cast<__int128>(q_) * o.q_ * 3;
  __int128 q = static_cast<__int128>(p_) * o.q_ + static_cast<__int128>(q_) * o.p_;
  __int128 d = static_cast<__int128>(d_) * o.d_;
  // Reduce in 128 bits first so that intermediate products do not spuriously overflow.
  auto g128 = [](__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  __int128 g = g128(g128(p, q), d);
  if (g > 1) {
    p /= g;
    q /= g;
    d /= g;
  }
  p_ = narrow(p);
  q_ = narrow(q);
  d_ = narrow(d);
  normalize();
  return *this;
}

RingScalar RingScalar::inverse() const {
  if (is_zero()) throw std::domain_error("RingScalar: inverse of zero");
  // d / (p + q sqrt3) = d (p - q sqrt3) / (p^2 - 3 q^2)
  __int128 norm = static_cast<__int128>(p_) * p_ - static_cast<__int128>(q_) * q_ * 3;
  RingScalar num(d_, 0, 1);
  num *= RingScalar(p_, -q_, 1);
  return RingScalar(num.p_, num.q_, narrow(norm));
}

RingScalar& RingScalar::operator/=(const RingScalar& o) { return *this *= o.inverse(); }

std::int64_t RingScalar::floor() const {
  auto k = static_cast<std::int64_t>(std::floor(to_double()));
  while (*this < RingScalar(k)) --k;
  while (*this >= RingScalar(k + 1)) ++k;
  return k;
}

double RingScalar::to_double() const {
  return (static_cast<double>(p_) + static_cast<double>(q_) * std::sqrt(3.0)) / static_cast<double>(d_);
}

std::strong_ordering operator<=>(const RingScalar& a, const RingScalar& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string RingScalar::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingScalar& s) {
  bool paren = s.d() != 1 && s.p() != 0 && s.q() != 0;
  if (paren) os << '(';
  if (s.q() == 0) {
    os << s.p();
  } else {
    if (s.p() != 0) os << s.p() << (s.q() > 0 ? "+" : "-");
    else if (s.q() < 0) os << '-';
    std::int64_t aq = s.q() < 0 ? -s.q() : s.q();
    if (aq != 1) os << aq;
    os << "r3";
  }
  if (paren) os << ')';
  if (s.d() != 1) os << '/' << s.d();
  return os;
}

std::size_t hash_value(const RingScalar& s) {
  std::size_t h = std::hash<std::int64_t>{}(s.p());
  h ^= std::hash<std::int64_t>{}(s.q()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= std::hash<std::int64_t>{}(s.d()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace coxhull
