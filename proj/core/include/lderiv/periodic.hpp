#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lderiv/arith.hpp"
#include "lderiv/real.hpp"

namespace lderiv {

// Rational-valued arithmetic function with period q, stored sparsely on
// residues 1..q (residue q stands for 0 mod q). Zero values are never
// stored. Immutable once built.
class PeriodicFunction {
 public:
  explicit PeriodicFunction(std::int64_t q);
  // Throws ValidationError on q < 1 or keys outside 1..q; drops zeros.
  PeriodicFunction(std::int64_t q, std::map<std::int64_t, Rational> values);

  std::int64_t period() const { return q_; }
  const std::map<std::int64_t, Rational>& values() const { return values_; }

  // f(a) for any integer a.
  Rational operator()(std::int64_t a) const;

  bool is_zero() const { return values_.empty(); }

  friend bool operator==(const PeriodicFunction&, const PeriodicFunction&) = default;

 private:
  std::int64_t q_;
  std::map<std::int64_t, Rational> values_;
};

PeriodicFunction operator*(const Rational& c, const PeriodicFunction& f);
PeriodicFunction operator+(const PeriodicFunction& f, const PeriodicFunction& g);

struct Validation {
  bool even = false;
  bool dirichlet_type = false;

  bool even_dirichlet() const { return even && dirichlet_type; }
};

// even: f(a) = f(q - a) for 1 <= a < q.
// dirichlet_type: f(a) = 0 whenever gcd(a, q) > 1.
Validation validate(const PeriodicFunction& f);

// Throws ValidationError unless f is even and Dirichlet-type.
void require_even_dirichlet(const PeriodicFunction& f, const char* operation);

// f(s) = chi(s) - 1 + c on units mod chi.modulus(), 0 elsewhere; so
// f(1) = c and f(s) - f(1) = chi(s) - 1.
PeriodicFunction from_character(const Character& chi, const Rational& c);

// c on every unit mod q, 0 elsewhere.
PeriodicFunction constant_on_units(std::int64_t q, const Rational& c);

// (a, f(a)) for 1 <= a <= q/2 with gcd(a, q) = 1, ascending, zeros
// included. f must be even and Dirichlet-type.
std::vector<std::pair<std::int64_t, Rational>> half_support(const PeriodicFunction& f);

// Residues 1 <= a <= q/2 coprime to q, ascending.
std::vector<std::int64_t> half_units(std::int64_t q);

}  // namespace lderiv
