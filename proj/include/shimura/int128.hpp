#pragma once

#include <cstdint>
#include <string>

#include "shimura/error.hpp"

namespace shimura {

using i128 = __int128;
using u128 = unsigned __int128;

inline constexpr i128 kI128Max = static_cast<i128>(~static_cast<u128>(0) >> 1);
inline constexpr i128 kI128Min = -kI128Max - 1;

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit addition overflow");
  return r;
}

inline i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit subtraction overflow");
  return r;
}

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit multiplication overflow");
  return r;
}

inline i128 checked_pow(i128 base, unsigned exp) {
  i128 r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline u128 uabs(i128 a) {
  return a < 0 ? static_cast<u128>(0) - static_cast<u128>(a) : static_cast<u128>(a);
}

std::string to_string(i128 value);
std::string to_string(u128 value);

/// Decimal parse with optional leading '-'; throws InvalidArgument or
/// OverflowError.
i128 parse_i128(const std::string& text);

}  // namespace shimura
