#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lderiv/arith.hpp"
#include "lderiv/periodic.hpp"
#include "lderiv/real.hpp"

namespace lderiv {

struct LogSineEntry {
  std::int64_t a;
  Real value;  // log(2 sin(a pi / q))
};

// log(2 sin(a pi/q)) for the residues 1 <= a <= q/2 coprime to q (from
// a = 2 when `from_two` is set), optionally followed by pi and log 2.
//
// Residues with sin(a pi/q) = 2^-alpha for rational alpha are dropped.
// Then sin^2 = cos-rational, so by Niven a/q is 1/6, 1/4 or 1/2; the last
// is never coprime for q >= 3.
struct LogSineBasis {
  std::int64_t q = 0;
  int digits = 0;
  bool from_two = false;
  std::vector<LogSineEntry> entries;
  std::vector<std::int64_t> excluded;
  std::optional<Real> pi;
  std::optional<Real> log2;

  bool extended() const { return pi.has_value(); }
  std::size_t size() const { return entries.size() + (extended() ? 2 : 0); }
  // "a=<residue>" per entry, then "pi", "log2".
  std::vector<std::string> labels() const;
  std::vector<Real> values() const;
};

struct LogSineOptions {
  bool extended = false;
  bool from_two = false;
};

LogSineBasis log_sine_basis(std::int64_t q, int digits, bool extended = false);
LogSineBasis log_sine_basis(std::int64_t q, int digits, const LogSineOptions& options);

// sum_{1 <= k < q, (k,q)=1} log(2 sin(k pi/q)): zero when q has two or more
// prime factors, log p when q = p^n.
Real sine_identity_residual(std::int64_t q, int digits);

// Values to search for an integer relation, re-computable at any
// precision so candidates can be checked independently.
struct RelationProblem {
  std::vector<std::string> labels;
  std::function<std::vector<Real>(int digits)> evaluate;
};

RelationProblem relation_problem(const LogSineBasis& basis);

struct Relation {
  std::vector<std::string> labels;
  std::vector<mpz_class> coefficients;  // same order as labels
  int digits = 0;
  Real residual_at_d;
  Real residual_at_2d;
  bool verified_at_2d = false;

  // Coefficients of the "a=<residue>" slots.
  std::map<std::int64_t, mpz_class> residue_coefficients() const;
};

// LLL on the lattice spanned by rows (e_i | round(10^(digits-10) x_i)).
// A reduced row c is accepted when max |c_i| <= max_coeff and
// |sum c_i x_i| < 10^(-2 digits + 10) after recomputing the x_i at
// 2 * digits. Deterministic. Throws PrecisionError when the scaled values
// all round to zero.
std::optional<Relation> find_integer_relation(const RelationProblem& problem,
                                              std::int64_t max_coeff, int digits);
std::optional<Relation> find_integer_relation(const LogSineBasis& basis, std::int64_t max_coeff,
                                              int digits);

// Smallest pair (p1, p2) of odd prime divisors of q with p2 = 1 (mod p1)
// and p1 = 1 (mod 4), so that p1 carries an even non-principal real
// character.
std::optional<std::pair<std::int64_t, std::int64_t>> ramachandra_admissible(std::int64_t q);

struct Witness {
  PeriodicFunction f;
  Real residual;  // |L'(0, f)|
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;
  Character chi;
  std::int64_t half_sum = 0;
};

// chi = quadratic character mod p1 lifted to q, f = from_character(chi, c).
// Throws ValidationError if q is not admissible and ComputationError if
// the character half-sum over 2 <= b <= q/2 is not -1.
Witness build_witness(std::int64_t q, const Rational& c, int digits);

// chi(s) - 1 over the half-support residues of q (from s = 2 when
// `from_two`), in basis order.
std::vector<mpz_class> witness_coefficients(const Character& chi, bool from_two);

// Exact test that `relation` is a rational multiple of `witness`.
bool in_rational_span(const std::vector<mpz_class>& relation,
                      const std::vector<mpz_class>& witness);

}  // namespace lderiv
