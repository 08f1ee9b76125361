#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shimura/abfield.hpp"
#include "shimura/arith.hpp"

namespace shimura::quaternion {

/// An indefinite quaternion division algebra over Q, identified with its
/// (nonempty, even) set of finite ramified primes.
class QuaternionAlgebra {
 public:
  const std::vector<std::int64_t>& ramified_primes() const { return ramified_; }
  std::int64_t discriminant() const;

  bool operator==(const QuaternionAlgebra&) const = default;

 private:
  friend QuaternionAlgebra from_discriminant(std::int64_t d);
  explicit QuaternionAlgebra(std::vector<std::int64_t> primes) : ramified_(std::move(primes)) {}

  std::vector<std::int64_t> ramified_;
};

/// Throws InvalidArgument unless d > 1 is squarefree with an even number of
/// prime factors.
QuaternionAlgebra from_discriminant(std::int64_t d);

/// What (a, b / Q) turned out to be when it is not an indefinite division
/// algebra.
struct SymbolReport {
  enum class Kind { kSplit, kDefinite };
  Kind kind;
  std::vector<arith::Place> ramified;
};

std::variant<QuaternionAlgebra, SymbolReport> from_symbol(std::int64_t a, std::int64_t b);

struct LocalDegree {
  std::int64_t p;
  int e;
  int f;

  bool operator==(const LocalDegree&) const = default;
};

struct Splitting {
  bool splits;
  std::vector<LocalDegree> local;  // one row per ramified prime
};

/// B tensor k is a matrix algebra iff every ramified prime of B has even
/// local degree e*f in k.
Splitting splits_over(const QuaternionAlgebra& b, const abfield::AbelianField& k);

struct QuadraticWitness {
  std::int64_t t;  // the field Q(sqrt(-t))
  std::optional<std::int64_t> witness_p;

  bool operator==(const QuadraticWitness&) const = default;
};

struct ClassBEvidence {
  std::int64_t q;
  bool member;
  std::vector<QuadraticWitness> witnesses;

  bool operator==(const ClassBEvidence&) const = default;
};

/// The imaginary quadratic fields that B must stay non-split over:
/// Q(sqrt(-q)), or both Q(sqrt(-1)) and Q(sqrt(-2)) when q = 2.
std::vector<std::int64_t> class_b_fields(std::int64_t q);

/// Membership in B(q). For each required field, the witness is the smallest
/// ramified prime that splits there (local degree 1).
ClassBEvidence in_class_b(const QuaternionAlgebra& b, std::int64_t q);

/// Same question answered through splits_over on each required field.
bool in_class_b_via_splitting(const QuaternionAlgebra& b, std::int64_t q);

}  // namespace shimura::quaternion
