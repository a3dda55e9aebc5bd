#include "lderiv/lseries.hpp"

#include <cstdio>

#include "lderiv/errors.hpp"
#include "lderiv/linalg.hpp"
#include "lderiv/numkernel.hpp"

namespace lderiv {

namespace {

constexpr int kGuardDigits = 10;

void reject_pole(const Real& s) {
  if (mpfr_cmp_si(s.get(), 1) == 0) {
    throw PoleError("L(s, f) is not evaluated at s = 1 (pole of the Hurwitz zeta terms)");
  }
}

}  // namespace

std::string_view to_string(LMethod m) {
  switch (m) {
    case LMethod::HurwitzSum:
      return "HurwitzSum";
    case LMethod::ClosedForm0:
      return "ClosedForm0";
    case LMethod::EvenReduced0:
      return "EvenReduced0";
  }
  return "HurwitzSum";
}

Real l_value(const Real& s, const PeriodicFunction& f, int digits) {
  check_digits(digits);
  reject_pole(s);
  const int wd = digits + kGuardDigits;
  const std::int64_t q = f.period();
  Real sum(wd);
  for (const auto& [a, v] : f.values()) {
    sum += Real(v, wd) * hurwitz_zeta(s, Rational(a, q), wd);
  }
  const Real q_pow = exp(-s.with_digits(wd) * log(Real(q, wd)));
  return (q_pow * sum).with_digits(digits);
}

Real l_deriv(const Real& s, const PeriodicFunction& f, int digits) {
  check_digits(digits);
  reject_pole(s);
  const int wd = digits + kGuardDigits;
  const std::int64_t q = f.period();
  Real zeta_sum(wd), dzeta_sum(wd);
  for (const auto& [a, v] : f.values()) {
    const Real coeff(v, wd);
    zeta_sum += coeff * hurwitz_zeta(s, Rational(a, q), wd);
    dzeta_sum += coeff * hurwitz_zeta_ds(s, Rational(a, q), wd);
  }
  const Real log_q = log(Real(q, wd));
  const Real q_pow = exp(-s.with_digits(wd) * log_q);
  return (q_pow * (dzeta_sum - log_q * zeta_sum)).with_digits(digits);
}

Rational lerch_first_term(const PeriodicFunction& f) {
  const std::int64_t q = f.period();
  Rational sum(0);
  for (const auto& [a, v] : f.values()) sum += v * (Rational(1, 2) - Rational(a, q));
  return sum;
}

Real l_deriv0_closed(const PeriodicFunction& f, int digits) {
  check_digits(digits);
  const int wd = digits + kGuardDigits;
  const std::int64_t q = f.period();
  Rational total(0);
  Real gamma_sum(wd);
  for (const auto& [a, v] : f.values()) {
    total += v;
    gamma_sum += Real(v, wd) * log_gamma_frac(a, q, wd);
  }
  const Real first = log(Real(q, wd)) * Real(lerch_first_term(f), wd);
  const Real third = log(pi(wd) * 2) * Real(total, wd) / 2;
  return (gamma_sum - first - third).with_digits(digits);
}

Real l_deriv0_even(const PeriodicFunction& f, int digits) {
  check_digits(digits);
  const std::int64_t q = f.period();
  if (q < 2) throw ValidationError("l_deriv0_even requires q >= 2");
  const auto terms = half_support(f);
  const int wd = digits + kGuardDigits;
  Real sum(wd);
  for (const auto& [a, v] : terms) {
    if (v.is_zero()) continue;
    Real term = Real(v, wd) * log(two_sin_pi(a, q, wd));
    if (2 * a == q) term /= 2;
    sum += term;
  }
  return (-sum).with_digits(digits);
}

LValue evaluate(const Real& s, const PeriodicFunction& f, int digits) {
  if (s.is_zero()) {
    if (f.period() >= 2 && validate(f).even_dirichlet()) {
      return {l_deriv0_even(f, digits), s, digest(f), LMethod::EvenReduced0, true};
    }
    return {l_deriv0_closed(f, digits), s, digest(f), LMethod::ClosedForm0, true};
  }
  return {l_value(s, f, digits), s, digest(f), LMethod::HurwitzSum, false};
}

FamilyRank family_rank(const std::vector<PeriodicFunction>& fs) {
  FamilyRank out;
  if (fs.empty()) return out;
  const std::int64_t q = fs.front().period();
  for (const auto& f : fs) {
    if (f.period() != q) throw ValidationError("family_rank: functions have different periods");
    require_even_dirichlet(f, "family_rank");
  }
  if (!is_prime_power(q)) {
    throw ValidationError("family_rank: period " + std::to_string(q) +
                          " is not a prime power");
  }
  const auto columns = half_units(q);
  // Transposed layout: one row per residue, one column per function, so
  // the right kernel is the space of dependencies.
  RationalMatrix m(columns.size(), std::vector<Rational>(fs.size()));
  for (std::size_t r = 0; r < columns.size(); ++r) {
    for (std::size_t i = 0; i < fs.size(); ++i) m[r][i] = fs[i](columns[r]);
  }
  const auto kernel = right_kernel(m, fs.size());
  out.rank = fs.size() - kernel.size();
  out.independent = kernel.empty();
  if (!kernel.empty()) out.certificate = primitive_integer_vector(kernel.front());
  return out;
}

std::string digest(const PeriodicFunction& f) {
  // FNV-1a over "q|a:v|a:v..."
  std::string canonical = std::to_string(f.period());
  for (const auto& [a, v] : f.values()) canonical += "|" + std::to_string(a) + ":" + v.to_string();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lderiv
