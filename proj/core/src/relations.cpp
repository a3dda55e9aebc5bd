#include "lderiv/relations.hpp"

#include <algorithm>
#include <string>

#include "lderiv/errors.hpp"
#include "lderiv/lattice.hpp"
#include "lderiv/linalg.hpp"
#include "lderiv/lseries.hpp"
#include "lderiv/numkernel.hpp"

namespace lderiv {

namespace {

constexpr const char* kResiduePrefix = "a=";

// 2 sin(a pi/q) is a rational power of 2 exactly at a/q = 1/6 (value 1)
// and a/q = 1/4 (value sqrt 2) on 0 < a/q < 1/2.
bool power_of_two_sine(std::int64_t a, std::int64_t q) { return 6 * a == q || 4 * a == q; }

Real relation_residual(const std::vector<mpz_class>& c, const std::vector<Real>& x, int digits) {
  Real sum(digits);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) sum += Real(c[i], digits) * x[i];
  }
  return abs(sum);
}

}  // namespace

std::vector<std::string> LogSineBasis::labels() const {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(kResiduePrefix + std::to_string(e.a));
  if (extended()) {
    out.emplace_back("pi");
    out.emplace_back("log2");
  }
  return out;
}

std::vector<Real> LogSineBasis::values() const {
  std::vector<Real> out;
  for (const auto& e : entries) out.push_back(e.value);
  if (extended()) {
    out.push_back(*pi);
    out.push_back(*log2);
  }
  return out;
}

LogSineBasis log_sine_basis(std::int64_t q, int digits, bool extended) {
  return log_sine_basis(q, digits, LogSineOptions{extended, false});
}

LogSineBasis log_sine_basis(std::int64_t q, int digits, const LogSineOptions& options) {
  check_digits(digits);
  if (q < 3) throw ValidationError("log_sine_basis requires q >= 3, got " + std::to_string(q));
  LogSineBasis basis;
  basis.q = q;
  basis.digits = digits;
  basis.from_two = options.from_two;
  for (std::int64_t a : half_units(q)) {
    if (options.from_two && a == 1) continue;
    if (power_of_two_sine(a, q)) {
      basis.excluded.push_back(a);
      continue;
    }
    basis.entries.push_back({a, log(two_sin_pi(a, q, digits))});
  }
  if (options.extended) {
    basis.pi = pi(digits);
    basis.log2 = log2_const(digits);
  }
  return basis;
}

Real sine_identity_residual(std::int64_t q, int digits) {
  check_digits(digits);
  if (q < 3) throw ValidationError("sine_identity_residual requires q >= 3");
  const int wd = digits + 10;
  Real sum(wd);
  for (std::int64_t k = 1; k < q; ++k) {
    if (gcd(k, q) == 1) sum += log(two_sin_pi(k, q, wd));
  }
  return sum.with_digits(digits);
}

RelationProblem relation_problem(const LogSineBasis& basis) {
  const LogSineOptions options{basis.extended(), basis.from_two};
  const std::int64_t q = basis.q;
  return {basis.labels(),
          [q, options](int digits) { return log_sine_basis(q, digits, options).values(); }};
}

std::map<std::int64_t, mpz_class> Relation::residue_coefficients() const {
  std::map<std::int64_t, mpz_class> out;
  const std::string prefix = kResiduePrefix;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].rfind(prefix, 0) == 0) {
      out.emplace(std::stoll(labels[i].substr(prefix.size())), coefficients[i]);
    }
  }
  return out;
}

std::optional<Relation> find_integer_relation(const RelationProblem& problem,
                                              std::int64_t max_coeff, int digits) {
  check_digits(digits);
  const std::size_t n = problem.labels.size();
  if (n < 2) throw ValidationError("integer relation search needs at least two values");
  if (max_coeff < 1) throw ValidationError("max_coeff must be at least 1");
  const int scale_digits = digits - 10;
  if (scale_digits < 1) {
    throw PrecisionError("lattice scaling 10^" + std::to_string(scale_digits) + " underflows");
  }

  const std::vector<Real> x = problem.evaluate(digits);
  if (x.size() != n) throw ValidationError("relation problem returned the wrong number of values");

  const Real scale = pow10(scale_digits, digits);
  IntMatrix lattice(n, std::vector<mpz_class>(n + 1, 0));
  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    lattice[i][i] = 1;
    const Real scaled = x[i] * scale;
    mpfr_get_z(lattice[i][n].get_mpz_t(), scaled.get(), MPFR_RNDN);
    all_zero = all_zero && lattice[i][n] == 0;
  }
  if (all_zero) {
    throw PrecisionError("lattice scaling underflows: every scaled value rounds to zero at " +
                         std::to_string(digits) + " digits");
  }

  lll_reduce(lattice);

  std::optional<std::vector<Real>> x_doubled;
  const Real limit_2d = pow10(-2L * digits + 10, 2 * digits);
  for (const auto& row : lattice) {
    std::vector<mpz_class> c(row.begin(), row.begin() + static_cast<long>(n));
    mpz_class l1 = 0;
    bool within = true;
    for (const auto& ci : c) {
      l1 += abs(ci);
      within = within && abs(ci) <= max_coeff;
    }
    if (l1 == 0 || !within) continue;
    Real residual_d = relation_residual(c, x, digits);
    if (residual_d > pow10(-digits + 10, digits) * Real(l1 + 1, digits)) continue;
    if (!x_doubled) x_doubled = problem.evaluate(2 * digits);
    Real residual_2d = relation_residual(c, *x_doubled, 2 * digits);
    if (!(residual_2d < limit_2d)) continue;

    // Normalize the sign so the first non-zero coefficient is positive.
    auto lead = std::find_if(c.begin(), c.end(), [](const mpz_class& v) { return v != 0; });
    if (*lead < 0) {
      for (auto& v : c) v = -v;
    }
    return Relation{problem.labels, std::move(c), digits, std::move(residual_d),
                    std::move(residual_2d), true};
  }
  return std::nullopt;
}

std::optional<Relation> find_integer_relation(const LogSineBasis& basis, std::int64_t max_coeff,
                                              int digits) {
  return find_integer_relation(relation_problem(basis), max_coeff, digits);
}

std::optional<std::pair<std::int64_t, std::int64_t>> ramachandra_admissible(std::int64_t q) {
  if (q < 3) return std::nullopt;
  std::vector<std::int64_t> primes;
  for (const auto& pp : factorize(q)) {
    if (pp.prime != 2) primes.push_back(pp.prime);
  }
  for (std::int64_t p1 : primes) {
    if (p1 % 4 != 1) continue;
    for (std::int64_t p2 : primes) {
      if (p2 != p1 && p2 % p1 == 1) return std::make_pair(p1, p2);
    }
  }
  return std::nullopt;
}

Witness build_witness(std::int64_t q, const Rational& c, int digits) {
  check_digits(digits);
  const auto pair = ramachandra_admissible(q);
  if (!pair) {
    throw ValidationError("q = " + std::to_string(q) +
                          " is not admissible: no odd primes p1 = 1 (mod 4), p2 = 1 (mod p1) "
                          "divide it");
  }
  Character chi = lift_character(quadratic_character(pair->first), q);
  const std::int64_t half_sum = character_half_sum(chi);
  if (half_sum != -1) {
    throw ComputationError("character half-sum over 2 <= b <= q/2 is " +
                           std::to_string(half_sum) + ", expected -1");
  }
  PeriodicFunction f = from_character(chi, c);
  Real residual = abs(l_deriv0_even(f, digits));
  return Witness{std::move(f), std::move(residual), pair->first, pair->second, std::move(chi),
                 half_sum};
}

std::vector<mpz_class> witness_coefficients(const Character& chi, bool from_two) {
  std::vector<mpz_class> out;
  for (std::int64_t a : half_units(chi.modulus())) {
    if (from_two && a == 1) continue;
    out.emplace_back(chi(a) - 1);
  }
  return out;
}

bool in_rational_span(const std::vector<mpz_class>& relation,
                      const std::vector<mpz_class>& witness) {
  if (relation.size() != witness.size()) return false;
  auto to_row = [](const std::vector<mpz_class>& v) {
    std::vector<Rational> row;
    for (const auto& x : v) row.emplace_back(x, mpz_class(1));
    return row;
  };
  const std::size_t witness_rank = exact_rank({to_row(witness)});
  return exact_rank({to_row(witness), to_row(relation)}) == witness_rank;
}

}  // namespace lderiv
