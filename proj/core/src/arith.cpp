#include "lderiv/arith.hpp"

#include <algorithm>
#include <numeric>

#include "lderiv/errors.hpp"

namespace lderiv {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod_u(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1U;
  }
  return result;
}

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw ValidationError(std::string(what) + " requires a positive integer");
}

}  // namespace

std::int64_t PrimePower::value() const {
  std::int64_t v = 1;
  for (int i = 0; i < exponent; ++i) v *= prime;
  return v;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  const u64 un = static_cast<u64>(n);
  u64 d = un - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  // These bases are a deterministic witness set below 3.3e24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod_u(a, d, un);
    if (x == 1 || x == un - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, un);
      if (x == un - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::int64_t n) {
  require_positive(n, "factorize");
  Factorization out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  if (mod < 1 || exp < 0) throw ValidationError("pow_mod requires mod >= 1 and exp >= 0");
  return static_cast<std::int64_t>(
      pow_mod_u(static_cast<u64>(mod_floor(base, mod)), static_cast<u64>(exp),
                static_cast<u64>(mod)));
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime_power(std::int64_t q) { return q >= 2 && factorize(q).size() == 1; }

std::int64_t euler_phi(std::int64_t n) {
  require_positive(n, "euler_phi");
  std::int64_t phi = 1;
  for (const auto& [p, e] : factorize(n)) {
    phi *= p - 1;
    for (int i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

std::int64_t mult_order(std::int64_t a, std::int64_t m) {
  if (m < 2) throw ValidationError("mult_order requires m >= 2");
  if (gcd(mod_floor(a, m), m) != 1) {
    throw ValidationError("mult_order: gcd(" + std::to_string(a) + ", " + std::to_string(m) +
                          ") > 1");
  }
  // Strip prime factors from phi(m) while a^(order/p) stays 1.
  std::int64_t order = euler_phi(m);
  for (const auto& [p, e] : factorize(order)) {
    for (int i = 0; i < e; ++i) {
      if (pow_mod(a, order / p, m) != 1) break;
      order /= p;
    }
  }
  return order;
}

std::string_view to_string(RootType t) {
  switch (t) {
    case RootType::Primitive:
      return "Primitive";
    case RootType::SemiPrimitive:
      return "SemiPrimitive";
    case RootType::Neither:
      return "Neither";
  }
  return "Neither";
}

RootType root_type(std::int64_t g, std::int64_t m) {
  if (m < 3) throw ValidationError("root_type requires m >= 3");
  const std::int64_t ord = mult_order(g, m);
  const std::int64_t phi = euler_phi(m);
  if (ord == phi) return RootType::Primitive;
  if (phi % 2 == 0 && ord == phi / 2) return RootType::SemiPrimitive;
  return RootType::Neither;
}

int Character::operator()(std::int64_t s) const {
  if (gcd(mod_floor(s, modulus_), modulus_) != 1) return 0;
  return table_[static_cast<std::size_t>(mod_floor(s, conductor_))];
}

Character quadratic_character(std::int64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw ValidationError("quadratic_character requires an odd prime, got " + std::to_string(p));
  }
  if (p % 4 != 1) {
    throw ValidationError("odd character: the quadratic character mod " + std::to_string(p) +
                          " has chi(-1) = -1 (p = 3 mod 4)");
  }
  Character chi;
  chi.conductor_ = p;
  chi.modulus_ = p;
  chi.table_.assign(static_cast<std::size_t>(p), 0);
  // Euler's criterion.
  for (std::int64_t a = 1; a < p; ++a) {
    chi.table_[static_cast<std::size_t>(a)] = pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
  }
  return chi;
}

Character lift_character(const Character& chi, std::int64_t q) {
  if (q < 1 || q % chi.conductor() != 0) {
    throw ValidationError("lift_character: conductor " + std::to_string(chi.conductor()) +
                          " does not divide " + std::to_string(q));
  }
  Character out = chi;
  out.modulus_ = q;
  return out;
}

std::int64_t character_half_sum(const Character& chi) {
  const std::int64_t q = chi.modulus();
  std::int64_t sum = 0;
  for (std::int64_t b = 2; 2 * b <= q; ++b) sum += chi(b);
  return sum;
}

}  // namespace lderiv
