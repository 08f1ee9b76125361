#include "shimura/tracesets.hpp"

#include <cmath>

#include "shimura/arith.hpp"

namespace shimura::tracesets {

namespace {

void check_params(std::int64_t n, unsigned e) {
  if (n < 2) throw InvalidArgument("trace sets need N >= 2");
  if (e < 1) throw InvalidArgument("trace sets need e >= 1");
}

}  // namespace

i128 trace_power(std::int64_t n, std::int64_t s, unsigned e) {
  check_params(n, e);
  const i128 big_n = n;
  i128 prev = 2;
  i128 cur = -i128{s};
  for (unsigned j = 1; j < e; ++j) {
    const i128 next = checked_sub(checked_mul(-i128{s}, cur), checked_mul(big_n, prev));
    prev = cur;
    cur = next;
  }
  return cur;
}

IntSet trace_set(std::int64_t n, unsigned e) {
  check_params(n, e);
  IntSet out;
  const i128 bound = checked_mul(4, i128{n});
  for (std::int64_t s = 0; checked_mul(s, s) <= bound; ++s) {
    out.insert(trace_power(n, s, e));
    out.insert(trace_power(n, -s, e));
  }
  return out;
}

IntSet d_set(std::int64_t n, unsigned e) {
  check_params(n, e);
  if (e % 2 != 0) throw InvalidArgument("non-integral D requested (odd e = " + std::to_string(e) + ")");
  const i128 half = checked_pow(n, e / 2);
  const i128 full = checked_mul(half, half);
  const i128 two_half = checked_mul(2, half);
  IntSet out;
  for (const i128 a : trace_set(n, e)) {
    out.insert(a);
    out.insert(checked_add(a, half));
    out.insert(checked_sub(a, half));
    out.insert(checked_add(a, two_half));
    out.insert(checked_sub(a, two_half));
    out.insert(checked_sub(checked_mul(a, a), checked_mul(3, full)));
  }
  return out;
}

IntSet prime_support(const IntSet& values) {
  IntSet out;
  for (const i128 v : values) {
    if (v == 0) continue;
    for (const i128 p : arith::factor(v).primes()) out.insert(p);
  }
  return out;
}

std::vector<std::int64_t> supported_primes(std::int64_t n, unsigned e, const std::vector<std::int64_t>& candidates) {
  check_params(n, e);
  if (e % 2 != 0) throw InvalidArgument("non-integral D requested (odd e = " + std::to_string(e) + ")");
  const i128 half = checked_pow(n, e / 2);
  checked_mul(4, half);  // a +- 2 N^(e/2) must stay representable
  const i128 four_n = checked_mul(4, i128{n});
  auto s_max = static_cast<i128>(std::sqrt(static_cast<long double>(four_n)));
  while (s_max * s_max > four_n) --s_max;
  while ((s_max + 1) * (s_max + 1) <= four_n) ++s_max;
  const i128 count = 2 * s_max + 1;

  // a^2 - 3 N^e is never zero (N^e is a square), so only its residue matters.
  // Each other element is a degree-e polynomial in s minus a constant, so it
  // vanishes for at most e values of s; a residue class with more than 5e
  // members always holds a nonzero representative.
  std::vector<std::int64_t> out;
  for (const std::int64_t p : candidates) {
    if (p < 2) continue;
    const i128 half_p = half % p;
    const i128 shifts[] = {0, half_p, -half_p, 2 * half_p, -2 * half_p};
    auto hit_mod_p = [&](i128 a_p) {
      const i128 sq = (a_p * a_p - 3 * half_p * half_p) % p;
      return sq == 0;
    };
    bool found = false;
    if (count / p > 5 * static_cast<i128>(e)) {
      for (i128 r = 0; r < p && !found; ++r) {
        i128 prev = 2 % p;
        i128 cur = (p - r) % p;
        for (unsigned j = 1; j < e; ++j) {
          const i128 next = ((p - r) * cur % p + (p - n % p) * prev % p) % p;
          prev = cur;
          cur = next;
        }
        for (const i128 shift : shifts) found = found || (cur + shift) % p == 0;
        found = found || hit_mod_p(cur);
      }
    } else {
      for (i128 s = -s_max; s <= s_max && !found; ++s) {
        i128 prev = 2;
        i128 cur = -s;
        for (unsigned j = 1; j < e; ++j) {
          const i128 next = checked_sub(checked_mul(-s, cur), checked_mul(i128{n}, prev));
          prev = cur;
          cur = next;
        }
        for (const i128 shift : {i128{0}, half, -half, 2 * half, -2 * half}) {
          const i128 v = cur + shift;
          found = found || (v != 0 && v % p == 0);
        }
        found = found || hit_mod_p(cur % p);
      }
    }
    if (found) out.push_back(p);
  }
  return out;
}

TraceData compute(std::int64_t n, unsigned e) {
  TraceData data;
  data.params = {n, e};
  data.c_set = trace_set(n, e);
  if (e % 2 == 0) {
    data.d_set = d_set(n, e);
    data.p_set = prime_support(*data.d_set);
  }
  return data;
}

}  // namespace shimura::tracesets
