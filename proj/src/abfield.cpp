#include "shimura/abfield.hpp"

#include <numeric>

#include "shimura/arith.hpp"
#include "shimura/error.hpp"

namespace shimura::abfield {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b)) %
                                   static_cast<std::uint64_t>(m));
}

void check_modulus(std::int64_t m) {
  if (m < 1) throw InvalidArgument("modulus must be >= 1, got " + std::to_string(m));
  if (m > kMaxModulus) {
    throw InvalidArgument("modulus " + std::to_string(m) + " exceeds the cap of " + std::to_string(kMaxModulus));
  }
}

bool is_unit(std::int64_t x, std::int64_t m) {
  return std::gcd(x, m) == 1;
}

// Membership bitset of a subgroup of (Z/m)^x together with its element list.
struct Group {
  std::int64_t modulus;
  std::vector<bool> bits;
  std::vector<std::int64_t> elements;

  explicit Group(std::int64_t m) : modulus(m), bits(static_cast<std::size_t>(m), false) {
    add(1 % m);
  }

  bool has(std::int64_t x) const { return bits[static_cast<std::size_t>(x)]; }

  void add(std::int64_t x) {
    bits[static_cast<std::size_t>(x)] = true;
    elements.push_back(x);
  }

  // <G, g> is the union of the cosets g^k G.
  void extend(std::int64_t g) {
    if (has(g)) return;
    const std::vector<std::int64_t> base = elements;
    std::int64_t power = g;
    while (!has(power)) {
      for (const std::int64_t h : base) add(mul_mod(power, h, modulus));
      power = mul_mod(power, g, modulus);
    }
  }
};

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = reduce(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return reduce(old_s, m);
}

}  // namespace

AbelianField from_membership(std::int64_t modulus, std::vector<bool> members) {
  return AbelianField(modulus, std::move(members), AbelianField::Trusted{});
}

AbelianField::AbelianField() : AbelianField(1, std::vector<bool>{true}, Trusted{}) {}

AbelianField::AbelianField(std::int64_t modulus, std::vector<bool> members, Trusted)
    : modulus_(modulus), members_(std::move(members)) {
  for (std::int64_t x = 0; x < modulus_; ++x) {
    if (members_[static_cast<std::size_t>(x)]) subgroup_.push_back(x);
  }
}

AbelianField::AbelianField(std::int64_t modulus, std::span<const std::int64_t> subgroup) : modulus_(modulus) {
  check_modulus(modulus);
  members_.assign(static_cast<std::size_t>(modulus), false);
  for (const std::int64_t raw : subgroup) {
    const std::int64_t x = reduce(raw, modulus);
    if (!is_unit(x, modulus)) {
      throw InvalidArgument("residue " + std::to_string(raw) + " is not a unit mod " + std::to_string(modulus));
    }
    members_[static_cast<std::size_t>(x)] = true;
  }
  for (std::int64_t x = 0; x < modulus_; ++x) {
    if (members_[static_cast<std::size_t>(x)]) subgroup_.push_back(x);
  }
  if (!contains(1 % modulus)) throw InvalidArgument("subgroup must contain 1");
  for (const std::int64_t a : subgroup_) {
    for (const std::int64_t b : subgroup_) {
      if (!contains(mul_mod(a, b, modulus))) throw InvalidArgument("subgroup is not closed under multiplication");
    }
  }
}

bool AbelianField::contains(std::int64_t residue) const {
  return members_[static_cast<std::size_t>(reduce(residue, modulus_))];
}

std::int64_t PrimeDecomposition::residue_cardinality() const {
  std::int64_t n = 1;
  for (int i = 0; i < f; ++i) n = static_cast<std::int64_t>(checked_mul(n, p));
  return n;
}

AbelianField rationals() {
  return AbelianField();
}

AbelianField quadratic_field(std::int64_t d) {
  if (d == 0 || d == 1) throw InvalidArgument("Q(sqrt(" + std::to_string(d) + ")) is not a quadratic field");
  if (!arith::is_squarefree(d)) throw InvalidArgument(std::to_string(d) + " is not squarefree");
  const std::int64_t disc = reduce(d, 4) == 1 ? d : 4 * d;
  const std::int64_t m = disc < 0 ? -disc : disc;
  check_modulus(m);
  std::vector<bool> members(static_cast<std::size_t>(m), false);
  for (std::int64_t x = 1; x < m; ++x) {
    if (is_unit(x, m) && arith::kronecker(disc, x) == 1) members[static_cast<std::size_t>(x)] = true;
  }
  return from_membership(m, std::move(members));
}

AbelianField cyclotomic_subfield(std::int64_t modulus, std::span<const std::int64_t> generators) {
  check_modulus(modulus);
  Group group(modulus);
  for (const std::int64_t raw : generators) {
    const std::int64_t g = reduce(raw, modulus);
    if (!is_unit(g, modulus)) {
      throw InvalidArgument("generator " + std::to_string(raw) + " is not coprime to " + std::to_string(modulus));
    }
    group.extend(g);
  }
  return from_membership(modulus, std::move(group.bits));
}

AbelianField compositum(const AbelianField& k1, const AbelianField& k2) {
  const std::int64_t m = std::lcm(k1.modulus(), k2.modulus());
  check_modulus(m);
  std::vector<bool> members(static_cast<std::size_t>(m), false);
  for (std::int64_t x = 0; x < m; ++x) {
    if (is_unit(x, m) && k1.contains(x) && k2.contains(x)) members[static_cast<std::size_t>(x)] = true;
  }
  return from_membership(m, std::move(members));
}

std::int64_t euler_phi(std::int64_t m) {
  if (m < 1) throw InvalidArgument("euler_phi needs m >= 1");
  std::int64_t result = m;
  for (const i128 p : arith::factor(m).primes()) {
    const auto q = static_cast<std::int64_t>(p);
    result = result / q * (q - 1);
  }
  return result;
}

int degree(const AbelianField& k) {
  return static_cast<int>(euler_phi(k.modulus()) / static_cast<std::int64_t>(k.subgroup().size()));
}

bool has_real_place(const AbelianField& k) {
  return k.contains(k.modulus() - 1);
}

PrimeDecomposition decompose(const AbelianField& k, std::int64_t p) {
  if (p < 2 || !arith::is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  const std::int64_t m = k.modulus();
  std::int64_t p_part = 1;
  std::int64_t rest = m;
  while (rest % p == 0) {
    rest /= p;
    p_part *= p;
  }

  // Inertia: the classes of U_p = {x : x = 1 mod m'} together with H.
  Group inertia_h(m);
  for (const std::int64_t h : k.subgroup()) inertia_h.extend(h);
  for (std::int64_t t = 0; t < p_part; ++t) {
    const std::int64_t x = reduce(1 + rest * t, m);
    if (is_unit(x, m)) inertia_h.extend(x);
  }
  const auto h_size = static_cast<std::int64_t>(k.subgroup().size());
  const auto e = static_cast<std::int64_t>(inertia_h.elements.size()) / h_size;

  // Frobenius: x = p mod m', x = 1 mod p^a.
  std::int64_t frob = reduce(p, m);
  if (p_part > 1) {
    // x = p + rest * t with rest * t = 1 - p (mod p_part)
    const std::int64_t t = mul_mod(reduce(1 - p, p_part), mod_inverse(rest, p_part), p_part);
    frob = reduce(p + rest * t, m);
  }
  std::int64_t f = 1;
  for (std::int64_t power = frob; !inertia_h.has(power); power = mul_mod(power, frob, m)) ++f;

  const std::int64_t group_order = euler_phi(m) / h_size;
  PrimeDecomposition out;
  out.p = p;
  out.e = static_cast<int>(e);
  out.f = static_cast<int>(f);
  out.g = static_cast<int>(group_order / (e * f));
  return out;
}

bool is_subfield(const AbelianField& sub, const AbelianField& k) {
  // Over lcm(m_F, m_k), the preimage of H_k maps onto the units y mod m_F
  // whose reduction mod gcd(m_F, m_k) lies in the reduction of H_k.
  const std::int64_t m_sub = sub.modulus();
  const std::int64_t g = std::gcd(m_sub, k.modulus());
  std::vector<bool> h_k_mod_g(static_cast<std::size_t>(g), false);
  for (const std::int64_t h : k.subgroup()) h_k_mod_g[static_cast<std::size_t>(h % g)] = true;
  for (std::int64_t y = 0; y < m_sub; ++y) {
    if (is_unit(y, m_sub) && h_k_mod_g[static_cast<std::size_t>(y % g)] && !sub.contains(y)) return false;
  }
  return true;
}

bool same_field(const AbelianField& a, const AbelianField& b) {
  return is_subfield(a, b) && is_subfield(b, a);
}

}  // namespace shimura::abfield
