#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace shimura::abfield {

inline constexpr std::int64_t kMaxModulus = 1000000;

/// An abelian number field, given as the fixed field of a subgroup H of
/// (Z/m)^x acting on Q(zeta_m). No conductor minimization is done, so two
/// different (m, H) may describe the same field; compare with same_field().
class AbelianField {
 public:
  /// The rationals: m = 1, H trivial.
  AbelianField();

  /// Validates that subgroup is a subgroup of (Z/m)^x (residues are reduced
  /// mod m first). Throws InvalidArgument otherwise.
  AbelianField(std::int64_t modulus, std::span<const std::int64_t> subgroup);

  std::int64_t modulus() const { return modulus_; }
  /// Sorted residues in [0, m).
  const std::vector<std::int64_t>& subgroup() const { return subgroup_; }
  bool contains(std::int64_t residue) const;

  bool operator==(const AbelianField& other) const {
    return modulus_ == other.modulus_ && subgroup_ == other.subgroup_;
  }

 private:
  struct Trusted {};
  AbelianField(std::int64_t modulus, std::vector<bool> members, Trusted);

  friend AbelianField from_membership(std::int64_t, std::vector<bool>);

  std::int64_t modulus_;
  std::vector<std::int64_t> subgroup_;
  std::vector<bool> members_;
};

struct PrimeDecomposition {
  std::int64_t p = 2;
  int e = 1;
  int f = 1;
  int g = 1;

  std::int64_t residue_cardinality() const;
  bool operator==(const PrimeDecomposition&) const = default;
};

/// Q(sqrt(d)) for squarefree d not in {0, 1}: m = |disc|, H = kernel of the
/// Kronecker character of disc.
AbelianField quadratic_field(std::int64_t d);

/// Fixed field of the subgroup generated by gens in (Z/m)^x. Negative
/// generators are reduced mod m.
AbelianField cyclotomic_subfield(std::int64_t modulus, std::span<const std::int64_t> generators);

AbelianField rationals();

AbelianField compositum(const AbelianField& k1, const AbelianField& k2);

std::int64_t euler_phi(std::int64_t m);
int degree(const AbelianField& k);

/// Abelian fields are totally real or totally imaginary; real iff complex
/// conjugation (-1 mod m) lies in H.
bool has_real_place(const AbelianField& k);

/// (e, f, g) of the rational prime p in k, read off from the images of
/// inertia and Frobenius in (Z/m)^x / H. Exact at wild primes.
PrimeDecomposition decompose(const AbelianField& k, std::int64_t p);

/// True iff F is contained in k.
bool is_subfield(const AbelianField& sub, const AbelianField& k);

/// Mutual containment.
bool same_field(const AbelianField& a, const AbelianField& b);

}  // namespace shimura::abfield
