#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lderiv/arith.hpp"
#include "lderiv/periodic.hpp"
#include "lderiv/real.hpp"

namespace lderiv {

// Which independence regime a modulus falls into.
//   PrimePower       q = p^n
//   QSix             q = 6
//   PeiFeng          q matches one of the Pei-Feng shapes I..V for
//                    multiplicative independence of cyclotomic units
//   TwoPNPower       q = 2 p^n, p odd
//   TwoTimesPeiFeng  q = 2m with m of shape III or V
//   Uncovered        none of the above
enum class ModulusCase { PrimePower, QSix, PeiFeng, TwoPNPower, TwoTimesPeiFeng, Uncovered };

std::string_view to_string(ModulusCase c);

// One evaluated condition. `holds` is the value of `predicate` applied to
// `args`, so every entry can be replayed with the arith primitives:
//   is_prime_power      (n)
//   equals              (a, b)
//   congruent           (a, r, m)        a = r (mod m)
//   root_type           (g, m)           root_type(g, m) == expect
//   order_equals        (a, m, k)        mult_order(a, m) == k
//   gcd_equals          (a, b, g)
//   pairwise_coprime    (x1, x2, ...)
//   shape               (n, e, k)        n = 2^e * (k distinct odd prime powers)
struct TraceEntry {
  std::string check;
  std::string predicate;
  std::vector<std::int64_t> args;
  std::string expect;  // only used by root_type
  bool holds = false;
};

struct Classification {
  std::int64_t q = 0;
  ModulusCase kind = ModulusCase::Uncovered;
  // "I,1" .. "V,1" for PeiFeng, "III" or "V" for TwoTimesPeiFeng.
  std::string subcase;
  std::vector<TraceEntry> trace;
  // log 2 sin(a pi/q) over 1 < a < q/2 coprime to q, with pi and log 2,
  // are linearly independent over the algebraic numbers.
  bool independent_excluding_one = false;
  // Same with the a = 1 term included: holds iff q is a prime power or 6.
  bool independent_including_one = false;

  // e.g. "PeiFeng(I,1)", "TwoTimesPeiFeng(III)", "PrimePower".
  std::string label() const;
};

// Fixed check order: prime power, q = 6, q = 2 (mod 4) (twice shape III/V,
// then 2 p^n), then the Pei-Feng ladder I..V; otherwise Uncovered.
Classification classify_modulus(std::int64_t q);

// Same, reading q's factorization in the order supplied (any permutation
// of the prime powers gives the same verdict).
Classification classify_modulus(std::int64_t q, const Factorization& factors);

enum class VanishingKind { ZeroIffZeroFunction, ZeroIffConstantOnUnits, AlwaysZero, Unknown };

std::string_view to_string(VanishingKind k);

struct VanishingVerdict {
  VanishingKind kind = VanishingKind::Unknown;
  // Which result backs the verdict: "prime-power-independence",
  // "pei-feng-independence", "q6-degeneracy", or "none".
  std::string applied_theorem;
  // Whether L'(0, f) = 0 for this particular f; empty when Unknown.
  std::optional<bool> predicts_zero;
  // |L'(0, f)| evaluated numerically; attached for Unknown verdicts.
  std::optional<Real> numeric_residual;

  // "L'(0,f) = 0", "L'(0,f) != 0 (transcendental)", or "undetermined".
  std::string statement() const;
};

// f must be even Dirichlet-type with period q.
VanishingVerdict vanishing_verdict(std::int64_t q, const PeriodicFunction& f, int digits);

}  // namespace lderiv
