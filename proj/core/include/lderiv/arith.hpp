#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lderiv {

struct PrimePower {
  std::int64_t prime;
  int exponent;

  std::int64_t value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Primes strictly increasing; empty for n = 1.
using Factorization = std::vector<PrimePower>;

// Deterministic Miller-Rabin for all 64-bit n.
bool is_prime(std::int64_t n);

// Trial division; n >= 1.
Factorization factorize(std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);
// Non-negative residue of a mod m (m >= 1).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

// q = p^n for a prime p and n >= 1.
bool is_prime_power(std::int64_t q);

std::int64_t euler_phi(std::int64_t n);

// Least k >= 1 with a^k = 1 (mod m); m >= 2 and gcd(a, m) = 1.
std::int64_t mult_order(std::int64_t a, std::int64_t m);

enum class RootType { Primitive, SemiPrimitive, Neither };

std::string_view to_string(RootType t);

// Primitive iff ord = phi(m), SemiPrimitive iff ord = phi(m)/2 (phi even).
RootType root_type(std::int64_t g, std::int64_t m);

// Real even character: values on residues mod `conductor` lifted to
// `modulus` (a multiple of the conductor). Units of the modulus take
// chi(s mod conductor); non-units take 0.
class Character {
 public:
  std::int64_t conductor() const { return conductor_; }
  std::int64_t modulus() const { return modulus_; }

  // chi(s) for any integer s.
  int operator()(std::int64_t s) const;

  const std::vector<int>& table() const { return table_; }

 private:
  friend Character quadratic_character(std::int64_t p);
  friend Character lift_character(const Character& chi, std::int64_t q);

  std::int64_t conductor_ = 1;
  std::int64_t modulus_ = 1;
  std::vector<int> table_;  // index = residue mod conductor
};

// Legendre symbol mod an odd prime p = 1 (mod 4); modulus = p.
Character quadratic_character(std::int64_t p);

// Same character viewed modulo q; requires conductor | q.
Character lift_character(const Character& chi, std::int64_t q);

// Sum of chi(b) over 2 <= b <= q/2 with gcd(b, q) = 1, q = chi.modulus().
std::int64_t character_half_sum(const Character& chi);

}  // namespace lderiv
