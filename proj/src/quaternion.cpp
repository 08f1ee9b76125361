#include "shimura/quaternion.hpp"

#include <algorithm>

#include "shimura/error.hpp"

namespace shimura::quaternion {

std::int64_t QuaternionAlgebra::discriminant() const {
  std::int64_t d = 1;
  for (const std::int64_t p : ramified_) d *= p;
  return d;
}

QuaternionAlgebra from_discriminant(std::int64_t d) {
  if (d <= 1) throw InvalidArgument("discriminant must be > 1 (d = 1 is the split algebra M2(Q))");
  const auto f = arith::factor(d);
  std::vector<std::int64_t> primes;
  for (const auto& [p, e] : f.factors) {
    if (e != 1) throw InvalidArgument("discriminant " + std::to_string(d) + " is not squarefree");
    primes.push_back(static_cast<std::int64_t>(p));
  }
  if (primes.size() % 2 != 0) {
    throw InvalidArgument("discriminant " + std::to_string(d) +
                          " has an odd number of prime factors (the algebra would be definite)");
  }
  return QuaternionAlgebra(std::move(primes));
}

std::variant<QuaternionAlgebra, SymbolReport> from_symbol(std::int64_t a, std::int64_t b) {
  auto places = arith::ramified_places(a, b);
  if (places.empty()) return SymbolReport{SymbolReport::Kind::kSplit, std::move(places)};
  if (places.back().is_infinite()) return SymbolReport{SymbolReport::Kind::kDefinite, std::move(places)};
  std::int64_t d = 1;
  for (const auto& v : places) d *= static_cast<std::int64_t>(v.prime());
  return from_discriminant(d);
}

Splitting splits_over(const QuaternionAlgebra& b, const abfield::AbelianField& k) {
  Splitting out{true, {}};
  for (const std::int64_t p : b.ramified_primes()) {
    const auto dec = abfield::decompose(k, p);
    out.local.push_back({p, dec.e, dec.f});
    if ((dec.e * dec.f) % 2 != 0) out.splits = false;
  }
  return out;
}

std::vector<std::int64_t> class_b_fields(std::int64_t q) {
  if (q < 2 || !arith::is_prime(q)) throw InvalidArgument(std::to_string(q) + " is not prime");
  if (q == 2) return {1, 2};
  return {q};
}

ClassBEvidence in_class_b(const QuaternionAlgebra& b, std::int64_t q) {
  ClassBEvidence out{q, true, {}};
  for (const std::int64_t t : class_b_fields(q)) {
    const auto field = abfield::quadratic_field(-t);
    QuadraticWitness w{t, std::nullopt};
    for (const std::int64_t p : b.ramified_primes()) {
      if (abfield::decompose(field, p).g == 2) {
        w.witness_p = p;
        break;
      }
    }
    if (!w.witness_p) out.member = false;
    out.witnesses.push_back(w);
  }
  return out;
}

bool in_class_b_via_splitting(const QuaternionAlgebra& b, std::int64_t q) {
  const auto fields = class_b_fields(q);
  return std::none_of(fields.begin(), fields.end(),
                      [&](std::int64_t t) { return splits_over(b, abfield::quadratic_field(-t)).splits; });
}

}  // namespace shimura::quaternion
