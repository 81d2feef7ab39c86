#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace coxhull {

using BigInt = mpz_class;

inline BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }
inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace coxhull
