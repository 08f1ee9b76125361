#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "shimura/int128.hpp"

namespace shimura::arith {

struct PrimePower {
  i128 prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

/// Canonical factorization of a nonzero integer: value = sign * prod p^e,
/// primes strictly increasing.
struct Factorization {
  i128 value = 1;
  int sign = 1;
  std::vector<PrimePower> factors;

  bool operator==(const Factorization&) const = default;

  /// Multiplies the factors back together (checked).
  i128 reconstruct() const;
  bool is_prime() const { return factors.size() == 1 && factors[0].exponent == 1 && sign == 1; }
  std::vector<i128> primes() const;
};

/// A place of Q: a finite prime or the real place.
class Place {
 public:
  static Place infinite() { return Place(0); }
  static Place finite(i128 p);

  bool is_infinite() const { return prime_ == 0; }
  i128 prime() const { return prime_; }
  std::string to_string() const;

  // Finite places sort by prime, the infinite place sorts last.
  std::strong_ordering operator<=>(const Place& other) const;
  bool operator==(const Place&) const = default;

 private:
  explicit Place(i128 p) : prime_(p) {}
  i128 prime_;
};

/// Throws InvalidArgument for n == 0 and OverflowError for |n| >= 2^127.
Factorization factor(i128 n);

/// Throws InvalidArgument for n < 2.
bool is_prime(i128 n);

i128 gcd(i128 a, i128 b);
i128 lcm(i128 a, i128 b);
bool is_squarefree(i128 n);

/// (base^exp) mod m for m >= 1, result in [0, m).
u128 pow_mod(u128 base, u128 exp, u128 m);

/// Kronecker symbol (a | n) with the usual extension to n <= 0 and even n.
/// Throws InvalidArgument when a == n == 0.
int kronecker(i128 a, i128 n);

/// Hilbert symbol (a, b)_v; +1 iff (a, b / Q) splits at v.
int hilbert(i128 a, i128 b, const Place& v);

/// Places where (a, b / Q) ramifies, sorted (finite primes ascending, then
/// infinity). Only infinity and the primes of 2ab are probed.
std::vector<Place> ramified_places(i128 a, i128 b);

}  // namespace shimura::arith
