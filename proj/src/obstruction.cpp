#include "shimura/obstruction.hpp"

#include <algorithm>
#include <stdexcept>

#include "shimura/error.hpp"
#include "shimura/field_spec.hpp"
#include "shimura/tracesets.hpp"

namespace shimura::obstruction {

namespace {

struct SOutline {
  bool split_case = false;
  int exponent = 0;
  std::int64_t nq = 0;
  std::vector<std::int64_t> escaping_primes;
};

// Membership in S(k, q) without materializing P(D): only the primes of d(B)
// are tested against D.
SOutline s_outline(const quaternion::QuaternionAlgebra& b, const abfield::AbelianField& k, std::int64_t q,
                   const abfield::PrimeDecomposition& dec) {
  SOutline out;
  out.split_case = quaternion::splits_over(b, k).splits;
  if (out.split_case && dec.e % 2 != 0) {
    throw UndefinedBranchError("S(k,q) is undefined when B splits over k and e_q = " + std::to_string(dec.e) +
                               " is odd");
  }
  out.exponent = out.split_case ? dec.e : 2 * dec.e;
  out.nq = dec.residue_cardinality();
  const auto& ramified = b.ramified_primes();
  const auto inside = tracesets::supported_primes(out.nq, static_cast<unsigned>(out.exponent), ramified);
  for (const std::int64_t p : ramified) {
    if (p != q && std::find(inside.begin(), inside.end(), p) == inside.end()) out.escaping_primes.push_back(p);
  }
  return out;
}

std::vector<FailedHypothesis> evaluate(const quaternion::QuaternionAlgebra& b, const abfield::AbelianField& k,
                                       std::int64_t q, const abfield::PrimeDecomposition& dec,
                                       const quaternion::ClassBEvidence& class_b) {
  std::vector<FailedHypothesis> reasons;
  const int deg = abfield::degree(k);
  if (deg % 2 != 0) reasons.push_back({Hypothesis::kEvenDegree, "[k:Q] = " + std::to_string(deg) + " is odd"});
  if (dec.g != 1) {
    reasons.push_back({Hypothesis::kUniquePrime, std::to_string(dec.g) + " primes of k lie above q"});
  }
  if (dec.f % 2 == 0) {
    reasons.push_back({Hypothesis::kOddResidueDegree, "f_q = " + std::to_string(dec.f) + " is even"});
  }
  if (!class_b.member) {
    std::string missing;
    for (const auto& w : class_b.witnesses) {
      if (!w.witness_p) missing += (missing.empty() ? "" : ", ") + std::string("Q(sqrt(-") + std::to_string(w.t) + "))";
    }
    reasons.push_back({Hypothesis::kClassB, "B splits over " + missing});
  }
  try {
    const auto s = s_outline(b, k, q, dec);
    if (s.escaping_primes.empty()) {
      reasons.push_back({Hypothesis::kOutsideS, "every prime of d(B) = " + std::to_string(b.discriminant()) +
                                                    " lies in P(D(" + std::to_string(s.nq) + "," +
                                                    std::to_string(s.exponent) + ")) + {" + std::to_string(q) +
                                                    "}"});
    }
  } catch (const UndefinedBranchError&) {
    reasons.push_back({Hypothesis::kSDefined,
                       "S(k,q) undefined: B splits over k and e_q = " + std::to_string(dec.e) + " is odd"});
  }
  return reasons;
}

}  // namespace

NamedField named_field(std::string_view spec_text) {
  const auto ast = field_spec::parse(spec_text);
  return {field_spec::print(ast), field_spec::build(ast)};
}

SMembership s_membership(const quaternion::QuaternionAlgebra& b, const abfield::AbelianField& k, std::int64_t q) {
  const auto dec = abfield::decompose(k, q);
  SMembership out;
  out.q = q;
  out.split_case = quaternion::splits_over(b, k).splits;
  if (out.split_case && dec.e % 2 != 0) {
    throw UndefinedBranchError("S(k,q) is undefined when B splits over k and e_q = " + std::to_string(dec.e) +
                               " is odd");
  }
  out.exponent = out.split_case ? dec.e : 2 * dec.e;
  out.nq = dec.residue_cardinality();
  const auto support = tracesets::prime_support(tracesets::d_set(out.nq, static_cast<unsigned>(out.exponent)));
  for (const i128 p : support) out.p_set.push_back(static_cast<std::int64_t>(p));
  if (!std::binary_search(out.p_set.begin(), out.p_set.end(), q)) {
    out.p_set.insert(std::upper_bound(out.p_set.begin(), out.p_set.end(), q), q);
  }
  for (const std::int64_t p : b.ramified_primes()) {
    if (!std::binary_search(out.p_set.begin(), out.p_set.end(), p)) out.escaping_primes.push_back(p);
  }
  out.in_s = out.escaping_primes.empty();
  return out;
}

std::string_view hypothesis_name(Hypothesis h) {
  switch (h) {
    case Hypothesis::kEvenDegree:
      return "even_degree";
    case Hypothesis::kUniquePrime:
      return "unique_prime_above_q";
    case Hypothesis::kOddResidueDegree:
      return "odd_residue_degree";
    case Hypothesis::kClassB:
      return "B_in_class_B(q)";
    case Hypothesis::kSDefined:
      return "S(k,q)_defined";
    case Hypothesis::kOutsideS:
      return "B_not_in_S(k,q)";
  }
  return "unknown";
}

FieldRecord field_record(const NamedField& k) {
  return {k.spec, k.field.modulus(), k.field.subgroup(), abfield::degree(k.field)};
}

bool is_proven(const Verdict& v) {
  return !std::holds_alternative<Inconclusive>(v);
}

Verdict theorem_check(const quaternion::QuaternionAlgebra& b, const NamedField& k, std::int64_t q) {
  const auto dec = abfield::decompose(k.field, q);
  const auto class_b = quaternion::in_class_b(b, q);
  auto reasons = evaluate(b, k.field, q, dec, class_b);

  if (!reasons.empty()) {
    if (reasons.size() == 1 && reasons.front().which == Hypothesis::kSDefined) {
      // Even degree, g = 1 and odd f force e even, so this cannot happen.
      throw UndefinedBranchError(reasons.front().detail);
    }
    return Inconclusive{{Attempt{q, std::move(reasons)}}};
  }

  if (dec.e % 2 != 0) throw std::logic_error("e_q odd in a certified case");
  const auto s_data = s_membership(b, k.field, q);
  if (s_data.in_s) throw std::logic_error("prime support disagrees with the direct membership test");
  Certificate c;
  c.disc = b.discriminant();
  c.field = field_record(k);
  c.q = q;
  c.e = dec.e;
  c.f = dec.f;
  c.g = dec.g;
  c.nq = s_data.nq;
  c.exponent = s_data.exponent;
  c.split_over_k = s_data.split_case;
  c.class_b = class_b.witnesses;
  c.p_set = s_data.p_set;
  c.witness_p = s_data.escaping_primes.front();
  return Proven{std::move(c)};
}

bool hypothesis_fails(const quaternion::QuaternionAlgebra& b, const abfield::AbelianField& k, std::int64_t q,
                      Hypothesis h) {
  switch (h) {
    case Hypothesis::kEvenDegree:
      return abfield::degree(k) % 2 != 0;
    case Hypothesis::kUniquePrime:
      return abfield::decompose(k, q).g != 1;
    case Hypothesis::kOddResidueDegree:
      return abfield::decompose(k, q).f % 2 == 0;
    case Hypothesis::kClassB:
      return !quaternion::in_class_b(b, q).member;
    case Hypothesis::kSDefined:
      try {
        s_outline(b, k, q, abfield::decompose(k, q));
        return false;
      } catch (const UndefinedBranchError&) {
        return true;
      }
    case Hypothesis::kOutsideS:
      try {
        return s_outline(b, k, q, abfield::decompose(k, q)).escaping_primes.empty();
      } catch (const UndefinedBranchError&) {
        return false;
      }
  }
  return false;
}

Verdict emptiness_scan(const quaternion::QuaternionAlgebra& b, const NamedField& k, std::int64_t q_max) {
  if (q_max < 2) throw InvalidArgument("q_max must be >= 2");
  if (abfield::has_real_place(k.field)) {
    return ProvenRealPlace{field_record(k), k.field.modulus() - 1};
  }
  Inconclusive failures;
  for (std::int64_t q = 2; q <= q_max; ++q) {
    if (!arith::is_prime(q)) continue;
    auto verdict = theorem_check(b, k, q);
    if (is_proven(verdict)) return verdict;
    auto& attempts = std::get<Inconclusive>(verdict).attempts;
    failures.attempts.insert(failures.attempts.end(), attempts.begin(), attempts.end());
  }
  return failures;
}

bool validate_certificate(const Certificate& c) {
  try {
    const auto b = quaternion::from_discriminant(c.disc);
    const auto k = named_field(c.field.spec);
    if (k.spec != c.field.spec) return false;
    const auto verdict = theorem_check(b, k, c.q);
    const auto* proven = std::get_if<Proven>(&verdict);
    return proven != nullptr && proven->certificate == c;
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<RegistryEntry> builtin_registry() {
  return {
      {39, named_field("Q(sqrt(-13))"),
       "Jordan, Points on Shimura curves rational over number fields, p. 94 (cf. Jordan-Livne, Local "
       "diophantine properties of Shimura curves)"},
      {62, named_field("Q(sqrt(-39))"),
       "Rotger-de Vera-Piquero, Galois representations over fields of moduli and rational points on Shimura "
       "curves, Table 1"},
      {86, named_field("Q(sqrt(-15))"),
       "Rotger-de Vera-Piquero, Galois representations over fields of moduli and rational points on Shimura "
       "curves, Table 1"},
  };
}

std::optional<LocalEvidence> local_solvability(const quaternion::QuaternionAlgebra& b,
                                               const abfield::AbelianField& k,
                                               const std::vector<RegistryEntry>& registry) {
  for (const auto& entry : registry) {
    if (entry.disc == b.discriminant() && abfield::is_subfield(entry.base.field, k)) {
      return LocalEvidence{entry.disc, entry.base.spec, entry.citation};
    }
  }
  return std::nullopt;
}

HasseReport hasse_report(const quaternion::QuaternionAlgebra& b, const NamedField& k, std::int64_t q_max,
                         const std::vector<RegistryEntry>& registry) {
  HasseReport report;
  report.disc = b.discriminant();
  report.field_spec = k.spec;
  report.global = emptiness_scan(b, k, q_max);
  report.local = local_solvability(b, k.field, registry);
  report.counterexample = is_proven(report.global) && report.local.has_value();
  return report;
}

}  // namespace shimura::obstruction
