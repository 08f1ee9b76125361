#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shimura/abfield.hpp"
#include "shimura/quaternion.hpp"

namespace shimura::obstruction {

/// A field together with the canonical spec text it was built from.
struct NamedField {
  std::string spec;
  abfield::AbelianField field;
};

/// Parses and canonicalizes spec text.
NamedField named_field(std::string_view spec_text);

/// Membership of B in the exceptional set S(k, q).
struct SMembership {
  std::int64_t q = 0;
  bool split_case = false;      // B splits over k
  int exponent = 0;             // e_q if split_case, else 2 e_q
  std::int64_t nq = 0;          // q^(f_q)
  std::vector<std::int64_t> p_set;  // P(D(nq, exponent)) with q adjoined
  bool in_s = false;
  std::vector<std::int64_t> escaping_primes;  // primes of d(B) outside p_set

  bool operator==(const SMembership&) const = default;
};

/// Throws UndefinedBranchError when B splits over k but e_q is odd.
SMembership s_membership(const quaternion::QuaternionAlgebra& b, const abfield::AbelianField& k, std::int64_t q);

enum class Hypothesis {
  kEvenDegree,         // [k:Q] even
  kUniquePrime,        // g_q = 1
  kOddResidueDegree,   // f_q odd
  kClassB,             // B in B(q)
  kSDefined,           // S(k, q) has a definition (not split with odd e_q)
  kOutsideS,           // B not in S(k, q)
};

std::string_view hypothesis_name(Hypothesis h);

struct FailedHypothesis {
  Hypothesis which;
  std::string detail;

  bool operator==(const FailedHypothesis&) const = default;
};

struct FieldRecord {
  std::string spec;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> subgroup;
  int degree = 1;

  bool operator==(const FieldRecord&) const = default;
};

FieldRecord field_record(const NamedField& k);

/// Everything needed to replay a successful hypothesis check.
struct Certificate {
  std::int64_t disc = 0;
  FieldRecord field;
  std::int64_t q = 0;
  int e = 0;
  int f = 0;
  int g = 0;
  std::int64_t nq = 0;
  int exponent = 0;
  bool split_over_k = false;
  std::vector<quaternion::QuadraticWitness> class_b;
  std::vector<std::int64_t> p_set;
  std::int64_t witness_p = 0;

  bool operator==(const Certificate&) const = default;
};

struct Proven {
  Certificate certificate;
  bool operator==(const Proven&) const = default;
};

/// k has a real place, and the curve has no real points.
struct ProvenRealPlace {
  FieldRecord field;
  std::int64_t conjugation = 0;  // -1 mod m, found in H
  bool operator==(const ProvenRealPlace&) const = default;
};

struct Attempt {
  std::int64_t q = 0;
  std::vector<FailedHypothesis> reasons;
  bool operator==(const Attempt&) const = default;
};

struct Inconclusive {
  std::vector<Attempt> attempts;
  bool operator==(const Inconclusive&) const = default;
};

using Verdict = std::variant<Proven, ProvenRealPlace, Inconclusive>;

bool is_proven(const Verdict& v);

/// Evaluates every hypothesis of the emptiness criterion for the prime q
/// (no short-circuiting) and returns either a certificate or the full list
/// of failures.
Verdict theorem_check(const quaternion::QuaternionAlgebra& b, const NamedField& k, std::int64_t q);

/// Re-tests a single hypothesis in isolation; true when it fails.
bool hypothesis_fails(const quaternion::QuaternionAlgebra& b, const abfield::AbelianField& k, std::int64_t q,
                      Hypothesis h);

/// Real place first, then theorem_check for each prime q <= q_max in
/// increasing order; the first success wins.
Verdict emptiness_scan(const quaternion::QuaternionAlgebra& b, const NamedField& k, std::int64_t q_max);

/// Rebuilds the certificate from (disc, field spec, q) and compares every
/// field. Never throws.
bool validate_certificate(const Certificate& c);

struct RegistryEntry {
  std::int64_t disc;
  NamedField base;
  std::string citation;
};

/// Known facts of the form "the curve for disc has points over every
/// completion of F".
std::vector<RegistryEntry> builtin_registry();

struct LocalEvidence {
  std::int64_t disc;
  std::string base_spec;
  std::string citation;

  bool operator==(const LocalEvidence&) const = default;
};

/// Local points over every completion of k, lifted from a registry subfield
/// F of k. nullopt means unknown, not insoluble.
std::optional<LocalEvidence> local_solvability(const quaternion::QuaternionAlgebra& b,
                                               const abfield::AbelianField& k,
                                               const std::vector<RegistryEntry>& registry);

inline constexpr std::string_view kCounterexampleLabel =
    "Hasse-principle counterexample (global emptiness machine-verified; local solvability by citation)";

struct HasseReport {
  std::int64_t disc = 0;
  std::string field_spec;
  Verdict global;
  std::optional<LocalEvidence> local;
  bool counterexample = false;

  bool operator==(const HasseReport&) const = default;
};

HasseReport hasse_report(const quaternion::QuaternionAlgebra& b, const NamedField& k, std::int64_t q_max,
                         const std::vector<RegistryEntry>& registry);

}  // namespace shimura::obstruction
