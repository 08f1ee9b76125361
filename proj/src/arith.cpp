#include "shimura/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

namespace shimura {

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return {digits.rbegin(), digits.rend()};
}

std::string to_string(i128 value) {
  if (value < 0) return "-" + to_string(uabs(value));
  return to_string(static_cast<u128>(value));
}

i128 parse_i128(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw InvalidArgument("not an integer: '" + text + "'");
  i128 value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') throw InvalidArgument("not an integer: '" + text + "'");
    value = checked_add(checked_mul(value, 10), negative ? -(c - '0') : (c - '0'));
  }
  return value;
}

}  // namespace shimura

namespace shimura::arith {

namespace {

constexpr std::array<unsigned, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Miller-Rabin with the first 13 prime bases is deterministic below this
// bound (Sorenson and Webster).
const u128 kMillerRabinProvenBound = static_cast<u128>(3317044064679887385ULL) * 1000000 + 961981;

constexpr u128 kU64Limit = static_cast<u128>(1) << 64;

u128 add_mod(u128 a, u128 b, u128 m) {
  return a >= m - b ? a - (m - b) : a + b;
}

u128 sub_mod(u128 a, u128 b, u128 m) {
  return a >= b ? a - b : m - (b - a);
}

u128 mul_mod(u128 a, u128 b, u128 m) {
  a %= m;
  b %= m;
  if (m <= kU64Limit) return (a * b) % m;
  u128 result = 0;
  while (b > 0) {
    if (b & 1) result = add_mod(result, a, m);
    a = add_mod(a, a, m);
    b >>= 1;
  }
  return result;
}

u128 half_mod(u128 a, u128 m) {
  // m odd, a < m < 2^127
  return (a & 1) ? (a + m) >> 1 : a >> 1;
}

u128 gcd_u(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 isqrt(u128 n) {
  if (n == 0) return 0;
  auto r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool miller_rabin(u128 n, u128 base) {
  u128 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u128 x = pow_mod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
bool strong_lucas(u128 n) {
  const u128 root = isqrt(n);
  if (root * root == n) return false;

  i128 d_param = 5;
  for (;;) {
    const int j = kronecker(d_param, static_cast<i128>(n));
    if (j == -1) break;
    if (j == 0 && uabs(d_param) != n) return false;
    d_param = d_param > 0 ? -(d_param + 2) : -d_param + 2;
  }
  const i128 q_param = (1 - d_param) / 4;
  auto to_residue = [n](i128 x) {
    const u128 r = uabs(x) % n;
    return x < 0 && r != 0 ? n - r : r;
  };
  const u128 dm = to_residue(d_param);
  const u128 qm = to_residue(q_param);

  u128 d = n + 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }

  int top = 127;
  while (((d >> top) & 1) == 0) --top;
  u128 u = 1, v = 1, qk = qm;  // P = 1, k = 1
  for (int bit = top - 1; bit >= 0; --bit) {
    u = mul_mod(u, v, n);
    v = sub_mod(mul_mod(v, v, n), add_mod(qk, qk, n), n);
    qk = mul_mod(qk, qk, n);
    if ((d >> bit) & 1) {
      const u128 u_next = half_mod(add_mod(u, v, n), n);
      const u128 v_next = half_mod(add_mod(mul_mod(dm, u, n), v, n), n);
      u = u_next;
      v = v_next;
      qk = mul_mod(qk, qm, n);
    }
  }
  if (u == 0 || v == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    v = sub_mod(mul_mod(v, v, n), add_mod(qk, qk, n), n);
    qk = mul_mod(qk, qk, n);
    if (v == 0) return true;
  }
  return false;
}

bool is_prime_u(u128 n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (unsigned p : kWitnesses) {
    if (!miller_rabin(n, p)) return false;
  }
  if (n < kMillerRabinProvenBound) return true;
  return strong_lucas(n);
}

// Brent's variant of Pollard rho; n odd composite.
u128 pollard_brent(u128 n) {
  for (u128 c = 1;; ++c) {
    auto step = [&](u128 x) { return add_mod(mul_mod(x, x, n), c, n); };
    u128 y = 2, x = 2, ys = 2, g = 1, q = 1;
    u128 r = 1;
    constexpr u128 kBatch = 128;
    while (g == 1) {
      x = y;
      for (u128 i = 0; i < r; ++i) y = step(y);
      u128 k = 0;
      while (k < r && g == 1) {
        ys = y;
        const u128 limit = std::min(kBatch, r - k);
        for (u128 i = 0; i < limit; ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u(q, n);
        k += kBatch;
      }
      r <<= 1;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd_u(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(u128 n, std::map<u128, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u(n)) {
    ++out[n];
    return;
  }
  const u128 d = pollard_brent(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

constexpr std::uint64_t kTrialLimit = 1 << 12;

}  // namespace

u128 pow_mod(u128 base, u128 exp, u128 m) {
  if (m == 1) return 0;
  u128 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

i128 Factorization::reconstruct() const {
  i128 r = sign;
  for (const auto& [p, e] : factors) r = checked_mul(r, checked_pow(p, e));
  return r;
}

std::vector<i128> Factorization::primes() const {
  std::vector<i128> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

Place Place::finite(i128 p) {
  if (p < 2 || !is_prime(p)) throw InvalidArgument("finite place needs a prime, got " + shimura::to_string(p));
  return Place(p);
}

std::string Place::to_string() const {
  return is_infinite() ? "inf" : shimura::to_string(prime_);
}

std::strong_ordering Place::operator<=>(const Place& other) const {
  if (is_infinite() || other.is_infinite()) {
    return static_cast<int>(is_infinite()) <=> static_cast<int>(other.is_infinite());
  }
  return prime_ <=> other.prime_;
}

Factorization factor(i128 n) {
  if (n == 0) throw InvalidArgument("cannot factor zero");
  if (n == kI128Min) throw OverflowError("magnitude must be below 2^127");
  Factorization result;
  result.value = n;
  result.sign = n < 0 ? -1 : 1;
  u128 m = uabs(n);

  std::map<u128, unsigned> found;
  auto divide_out = [&](std::uint64_t d) {
    while (m % d == 0) {
      m /= d;
      ++found[d];
    }
  };
  divide_out(2);
  for (std::uint64_t d = 3; d <= kTrialLimit && static_cast<u128>(d) * d <= m; d += 2) {
    if (m < kU64Limit) {
      auto small = static_cast<std::uint64_t>(m);
      while (small % d == 0) {
        small /= d;
        ++found[d];
      }
      m = small;
    } else {
      divide_out(d);
    }
  }
  if (m > 1) factor_large(m, found);

  for (const auto& [p, e] : found) result.factors.push_back({static_cast<i128>(p), e});
  return result;
}

bool is_prime(i128 n) {
  if (n < 2) throw InvalidArgument("primality is only defined here for n >= 2");
  return is_prime_u(static_cast<u128>(n));
}

i128 gcd(i128 a, i128 b) {
  return static_cast<i128>(gcd_u(uabs(a), uabs(b)));
}

i128 lcm(i128 a, i128 b) {
  if (a == 0 || b == 0) return 0;
  const i128 g = gcd(a, b);
  return checked_mul(static_cast<i128>(uabs(a)) / g, static_cast<i128>(uabs(b)));
}

bool is_squarefree(i128 n) {
  if (n == 0) return false;
  const auto f = factor(n);
  return std::all_of(f.factors.begin(), f.factors.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

int kronecker(i128 a, i128 n) {
  if (a == 0 && n == 0) throw InvalidArgument("kronecker(0, 0) is undefined");
  // (a | 2) indexed by a mod 8
  static constexpr std::array<int, 8> kTwo = {0, 1, 0, -1, 0, -1, 0, 1};
  auto mod8 = [](i128 x) { return static_cast<int>(((x % 8) + 8) % 8); };

  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;

  int k = 1;
  unsigned v = 0;
  u128 un = uabs(n);
  while ((un & 1) == 0) {
    un >>= 1;
    ++v;
  }
  if (v & 1) k = kTwo[mod8(a)];
  if (n < 0 && a < 0) k = -k;

  // Jacobi symbol (a | un), un odd positive.
  const u128 ua = uabs(a) % un;
  u128 x = (a < 0 && ua != 0) ? un - ua : ua;
  u128 y = un;
  while (x != 0) {
    while ((x & 1) == 0) {
      x >>= 1;
      const auto r = static_cast<int>(y & 7);
      if (r == 3 || r == 5) k = -k;
    }
    std::swap(x, y);
    if ((x & 3) == 3 && (y & 3) == 3) k = -k;
    x %= y;
  }
  return y == 1 ? k : 0;
}

int hilbert(i128 a, i128 b, const Place& v) {
  if (a == 0 || b == 0) throw InvalidArgument("hilbert symbol needs nonzero arguments");
  if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;

  const i128 p = v.prime();
  auto split_valuation = [p](i128 x, unsigned& val) {
    val = 0;
    while (x % p == 0) {
      x /= p;
      ++val;
    }
    return x;
  };
  unsigned alpha = 0, beta = 0;
  const i128 u = split_valuation(a, alpha);
  const i128 w = split_valuation(b, beta);

  if (p == 2) {
    // epsilon(x) = (x - 1) / 2 and omega(x) = (x^2 - 1) / 8, both mod 2,
    // evaluated on the representative of x mod 8 in {1, 3, 5, 7}.
    auto rep = [](i128 x) { return static_cast<int>(((x % 8) + 8) % 8); };
    auto epsilon = [](int r) { return ((r - 1) / 2) & 1; };
    auto omega = [](int r) { return ((r * r - 1) / 8) & 1; };
    const int ru = rep(u), rw = rep(w);
    const int exponent = epsilon(ru) * epsilon(rw) + static_cast<int>(alpha & 1) * omega(rw) +
                         static_cast<int>(beta & 1) * omega(ru);
    return (exponent & 1) ? -1 : 1;
  }

  int result = 1;
  if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) result = -result;
  if (beta & 1) result *= kronecker(u, p);
  if (alpha & 1) result *= kronecker(w, p);
  return result;
}

std::vector<Place> ramified_places(i128 a, i128 b) {
  if (a == 0 || b == 0) throw InvalidArgument("ramified_places needs nonzero arguments");
  std::set<i128> candidates = {2};
  for (i128 p : factor(a).primes()) candidates.insert(p);
  for (i128 p : factor(b).primes()) candidates.insert(p);

  std::vector<Place> out;
  for (i128 p : candidates) {
    const Place place = Place::finite(p);
    if (hilbert(a, b, place) == -1) out.push_back(place);
  }
  if (hilbert(a, b, Place::infinite()) == -1) out.push_back(Place::infinite());
  return out;
}

}  // namespace shimura::arith
