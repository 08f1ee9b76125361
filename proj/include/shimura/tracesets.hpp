#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "shimura/int128.hpp"

namespace shimura::tracesets {

using IntSet = std::set<i128>;

struct TraceParams {
  std::int64_t n = 2;  // residue-field cardinality
  unsigned e = 1;

  bool operator==(const TraceParams&) const = default;
};

struct TraceData {
  TraceParams params;
  IntSet c_set;
  std::optional<IntSet> d_set;  // present only for even e
  std::optional<IntSet> p_set;

  bool operator==(const TraceData&) const = default;
};

/// t_e for one s: alpha^e + conj(alpha)^e with alpha a root of T^2 + sT + N.
i128 trace_power(std::int64_t n, std::int64_t s, unsigned e);

/// Values alpha^e + conj(alpha)^e where alpha runs over the roots of
/// T^2 + sT + N, s^2 <= 4N. Each value comes from the integer recurrence
/// t_0 = 2, t_1 = -s, t_{j+1} = -s t_j - N t_{j-1}.
IntSet trace_set(std::int64_t n, unsigned e);

/// Union over a in trace_set(n, e) of {a, a +- N^(e/2), a +- 2 N^(e/2),
/// a^2 - 3 N^e}. Odd e is rejected (InvalidArgument): the set would not be
/// integral.
IntSet d_set(std::int64_t n, unsigned e);

/// Primes dividing some nonzero element of values.
IntSet prime_support(const IntSet& values);

/// The candidates that lie in P(D(n, e)), without building D or factoring.
/// Same contract as d_set for odd e.
std::vector<std::int64_t> supported_primes(std::int64_t n, unsigned e, const std::vector<std::int64_t>& candidates);

/// All three sets at once; d_set/p_set are left empty for odd e.
TraceData compute(std::int64_t n, unsigned e);

}  // namespace shimura::tracesets
