#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the library's number theory; they answer the same questions by
// enumeration so the two routes can be compared.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "shimura/int128.hpp"

namespace oracle {

using shimura::i128;

inline bool is_prime_trial(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Legendre symbol by listing the squares mod an odd prime p.
inline int legendre_by_squares(std::int64_t a, std::int64_t p) {
  const std::int64_t r = mod(a, p);
  if (r == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == r) return 1;
  }
  return -1;
}

/// Kronecker symbol assembled from its definition: factor n by trial
/// division and multiply the local symbols.
inline int kronecker_by_definition(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    const std::int64_t r = mod(a, 8);
    if (r == 3 || r == 5) result = -result;
  }
  for (std::int64_t p = 3; n > 1; p += 2) {
    while (n % p == 0) {
      n /= p;
      result *= legendre_by_squares(a, p);
    }
  }
  return result;
}

/// trace(M^e) for the companion matrix M = [[0, -N], [1, -s]] of
/// T^2 + sT + N, by repeated exact 2x2 multiplication.
inline i128 companion_trace(std::int64_t n, std::int64_t s, unsigned e) {
  using Mat = std::array<i128, 4>;
  auto mul = [](const Mat& x, const Mat& y) {
    using shimura::checked_add;
    using shimura::checked_mul;
    return Mat{checked_add(checked_mul(x[0], y[0]), checked_mul(x[1], y[2])),
               checked_add(checked_mul(x[0], y[1]), checked_mul(x[1], y[3])),
               checked_add(checked_mul(x[2], y[0]), checked_mul(x[3], y[2])),
               checked_add(checked_mul(x[2], y[1]), checked_mul(x[3], y[3]))};
  };
  const Mat m{0, -n, 1, -s};
  Mat acc{1, 0, 0, 1};
  for (unsigned i = 0; i < e; ++i) acc = mul(acc, m);
  return acc[0] + acc[3];
}

/// Hilbert symbol (a, b)_p for p in {2, 3, 5, 7}: does a x^2 + b y^2 = z^2
/// have a primitive solution mod p^3 (odd p) or mod 2^5? After removing
/// square factors of p, that is equivalent to a nontrivial p-adic zero by
/// Hensel's lemma.
inline int hilbert_by_search(std::int64_t a, std::int64_t b, std::int64_t p) {
  auto strip = [p](std::int64_t x) {
    while (x % (p * p) == 0) x /= p * p;
    return x;
  };
  a = strip(a);
  b = strip(b);
  const std::int64_t modulus = p == 2 ? 32 : p * p * p;
  std::vector<bool> any_root(static_cast<std::size_t>(modulus), false);
  std::vector<bool> unit_root(static_cast<std::size_t>(modulus), false);
  for (std::int64_t z = 0; z < modulus; ++z) {
    const auto r = static_cast<std::size_t>(z * z % modulus);
    any_root[r] = true;
    if (z % p != 0) unit_root[r] = true;
  }
  const std::int64_t am = mod(a, modulus), bm = mod(b, modulus);
  for (std::int64_t x = 0; x < modulus; ++x) {
    for (std::int64_t y = 0; y < modulus; ++y) {
      const auto r = static_cast<std::size_t>((am * (x * x % modulus) + bm * (y * y % modulus)) % modulus);
      const bool xy_unit = x % p != 0 || y % p != 0;
      if (xy_unit ? any_root[r] : unit_root[r]) return 1;
    }
  }
  return -1;
}

/// Splitting type of p in Q(sqrt(d)) by counting roots of x^2 = d mod p
/// (odd p) or by the classical mod-8 rule read off the field discriminant
/// (p = 2). Returns {e, f, g}.
inline std::array<int, 3> quadratic_splitting(std::int64_t d, std::int64_t p) {
  const std::int64_t disc = mod(d, 4) == 1 ? d : 4 * d;
  if (disc % p == 0) return {2, 1, 1};
  if (p == 2) {
    const std::int64_t r = mod(d, 8);
    return r == 1 ? std::array<int, 3>{1, 1, 2} : std::array<int, 3>{1, 2, 1};
  }
  int roots = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    if ((x * x - mod(d, p)) % p == 0) ++roots;
  }
  return roots == 2 ? std::array<int, 3>{1, 1, 2} : std::array<int, 3>{1, 2, 1};
}

inline bool is_squarefree_trial(std::int64_t n) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

}  // namespace oracle
