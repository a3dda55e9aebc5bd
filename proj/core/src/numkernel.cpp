#include "lderiv/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "lderiv/errors.hpp"

namespace lderiv {

namespace {

// Tangent numbers T_1..T_n (Brent & Harvey, "Fast computation of Bernoulli,
// Tangent and Secant numbers"); B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
std::vector<mpz_class> tangent_numbers(int n) {
  std::vector<mpz_class> t(static_cast<std::size_t>(n) + 1, 0);
  if (n < 1) return t;
  t[1] = 1;
  for (int k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
  for (int k = 2; k <= n; ++k) {
    for (int j = k; j <= n; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
  }
  return t;
}

class BernoulliTable {
 public:
  Rational get(int n) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<int>(table_.size())) return table_[n];
    }
    std::unique_lock lock(mutex_);
    if (n >= static_cast<int>(table_.size())) {
      fill(std::max(n + 1, 2 * static_cast<int>(table_.size())));
    }
    return table_[n];
  }

 private:
  void fill(int size) {
    std::vector<Rational> table(static_cast<std::size_t>(size));
    table[0] = Rational(1);
    if (size > 1) table[1] = Rational(-1, 2);
    auto t = tangent_numbers(size / 2);
    for (int k = 1; 2 * k < size; ++k) {
      mpz_class four_k;
      mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
      mpz_class num = 2 * k * t[k];
      if (k % 2 == 0) num = -num;
      table[2 * k] = Rational(num, four_k * (four_k - 1));
    }
    table_ = std::move(table);
  }

  std::shared_mutex mutex_;
  std::vector<Rational> table_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

// Extra working digits carried through every evaluation before rounding
// back to the caller's precision.
constexpr int kGuardDigits = 20;

struct EmTerms {
  Real value;
  Real deriv;
};

EmTerms euler_maclaurin(const Real& s_in, const Rational& x, int digits, bool want_deriv,
                        const EulerMaclaurinOptions& options) {
  check_digits(digits);
  if (x.sign() <= 0 || x > Rational(1)) {
    throw ValidationError("Hurwitz zeta argument must lie in (0, 1], got " + x.to_string());
  }
  if (mpfr_number_p(s_in.get()) == 0) throw ValidationError("s must be finite");
  if (mpfr_cmp_si(s_in.get(), 1) == 0) throw PoleError("Hurwitz zeta has a pole at s = 1");

  const int wd = digits + kGuardDigits;
  const Real s = s_in.with_digits(wd);
  const Real one(1, wd);
  const Real eps = pow10(-(digits + 10), wd);
  const long cap = static_cast<long>(options.max_shift_factor) * digits;

  // Find a shift N for which the Bernoulli tail converges below eps, and
  // keep the tail sums from that attempt.
  long n_shift = std::max<long>(10, static_cast<long>(std::ceil(0.8 * digits)));
  Real tail(wd), dtail(wd);
  for (;;) {
    if (n_shift > cap) {
      throw ConvergenceError("Euler-Maclaurin tail did not converge below 1e-" +
                             std::to_string(digits + 10) + " with shift <= " +
                             std::to_string(cap));
    }
    const Real y = Real(Rational(n_shift) + x, wd);
    const Real log_y = log(y);
    const Real inv_y2 = one / (y * y);
    Real w = exp(-(s + one) * log_y);  // y^(-s-2k+1) at k = 1
    Real rising = s;                  // (s)_{2k-1}
    Real drising = one;               // d/ds (s)_{2k-1}
    mpz_class factorial = 2;          // (2k)!
    tail = Real(wd);
    dtail = Real(wd);
    Real previous(wd);
    bool converged = false;
    for (int k = 1;; ++k) {
      const Real coeff = Real(bernoulli(2 * k), wd) / Real(factorial, wd);
      const Real term = coeff * rising * w;
      const Real dterm = coeff * (drising - rising * log_y) * w;
      const Real magnitude = abs(want_deriv ? dterm : term);
      if (magnitude < eps) {
        converged = true;
        break;
      }
      if (k > 1 && magnitude > previous) break;  // asymptotic series turned
      tail += term;
      dtail += dterm;
      previous = magnitude;
      for (long j : {2L * k - 1, 2L * k}) {
        const Real sj = s + Real(j, wd);
        drising = drising * sj + rising;
        rising *= sj;
      }
      factorial *= (2 * k + 1) * (2 * k + 2);
      w *= inv_y2;
    }
    if (converged) break;
    n_shift *= 2;
  }

  Real head(wd), dhead(wd);
  for (long n = 0; n < n_shift; ++n) {
    const Real log_t = log(Real(Rational(n) + x, wd));
    const Real t_pow = exp(-s * log_t);
    head += t_pow;
    if (want_deriv) dhead -= log_t * t_pow;
  }

  const Real y = Real(Rational(n_shift) + x, wd);
  const Real log_y = log(y);
  const Real y_pow = exp(-s * log_y);  // y^(-s)
  const Real s_minus_1 = s - one;
  const Real integral = y * y_pow / s_minus_1;
  Real value = head + integral + y_pow / 2 + tail;
  Real deriv(wd);
  if (want_deriv) {
    deriv = dhead - log_y * integral - integral / s_minus_1 - log_y * y_pow / 2 + dtail;
  }
  return {value.with_digits(digits), deriv.with_digits(digits)};
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw ValidationError("bernoulli index must be non-negative");
  if (n > 1 && n % 2 == 1) return Rational(0);
  return bernoulli_table().get(n);
}

Real two_sin_pi(std::int64_t a, std::int64_t q, int digits) {
  check_digits(digits);
  if (a <= 0 || a >= q) {
    throw ValidationError("two_sin_pi requires 1 <= a < q, got a=" + std::to_string(a) +
                          ", q=" + std::to_string(q));
  }
  const int wd = digits + 10;
  Real angle = pi(wd) * Real(Rational(a, q), wd);
  return (sin(angle) * 2).with_digits(digits);
}

Real log_gamma_frac(std::int64_t a, std::int64_t q, int digits) {
  check_digits(digits);
  if (a <= 0 || q <= 0) {
    throw ValidationError("log_gamma_frac requires a >= 1 and q >= 1, got a=" +
                          std::to_string(a) + ", q=" + std::to_string(q));
  }
  const int wd = digits + kGuardDigits;
  const Rational x(a, q);

  // Shift z = x + M above 1.2 * digits; Gamma(x) = Gamma(z) / prod_{j<M}(x+j).
  const double threshold = 1.2 * digits;
  long shift = 0;
  if (x.get().get_d() <= threshold) {
    shift = static_cast<long>(std::ceil(threshold - x.get().get_d())) + 1;
  }
  mpz_class product = 1;
  for (long j = 0; j < shift; ++j) product *= mpz_class(a) + mpz_class(j) * q;
  // prod_{j<M} (x + j) = product / q^M
  Real log_product = log(Real(product, wd)) - log(Real(q, wd)) * shift;

  const Rational z_exact = x + Rational(shift);
  const Real z(z_exact, wd);
  const Real log_z = log(z);
  Real result = (z - Real(Rational(1, 2), wd)) * log_z - z + log(pi(wd) * 2) / 2;

  const Real eps = pow10(-(digits + 10), wd);
  const Real inv_z2 = Real(1, wd) / (z * z);
  Real z_pow = Real(1, wd) / z;  // z^-(2k-1)
  Real previous(wd);
  for (int k = 1;; ++k) {
    const Rational c = bernoulli(2 * k) / Rational(2L * k * (2L * k - 1));
    const Real term = Real(c, wd) * z_pow;
    const Real magnitude = abs(term);
    if (magnitude < eps) break;
    if (k > 1 && magnitude > previous) {
      throw ConvergenceError("Stirling series diverged before reaching target accuracy");
    }
    result += term;
    previous = magnitude;
    z_pow *= inv_z2;
  }
  return (result - log_product).with_digits(digits);
}

Real hurwitz_zeta(const Real& s, const Rational& x, int digits,
                  const EulerMaclaurinOptions& options) {
  return euler_maclaurin(s, x, digits, false, options).value;
}

Real hurwitz_zeta_ds(const Real& s, const Rational& x, int digits,
                     const EulerMaclaurinOptions& options) {
  return euler_maclaurin(s, x, digits, true, options).deriv;
}

}  // namespace lderiv
