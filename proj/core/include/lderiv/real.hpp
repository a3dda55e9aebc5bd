#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lderiv {

// Smallest precision any Real may carry, in decimal digits.
inline constexpr int kMinDigits = 10;

// Binary precision used for a request of `digits` decimal digits:
// ceil(digits * log2(10)) + 32 guard bits.
mpfr_prec_t bits_for_digits(int digits);

// Throws ValidationError when digits < kMinDigits.
void check_digits(int digits);

// Exact fraction in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long numerator);  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  Rational(mpz_class numerator, mpz_class denominator);
  explicit Rational(mpq_class value);

  // Accepts "n" or "n/d" with optional leading sign on n.
  static Rational parse(std::string_view text);

  // "n" when the denominator is 1, otherwise "n/d".
  std::string to_string() const;

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& get() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Arbitrary-precision real number with an explicit decimal working
// precision. Binary results take the larger precision of their operands.
class Real {
 public:
  explicit Real(int digits = 50);
  Real(long value, int digits);
  Real(const Rational& value, int digits);
  Real(const mpz_class& value, int digits);

  // Decimal literal such as "0.25", "-1e-10" or "3".
  static Real parse(std::string_view text, int digits);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  int digits() const { return digits_; }
  // Same value rounded to a new precision.
  Real with_digits(int digits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // log10 of |x|; -infinity for zero.
  double log10_abs() const;

  // Decimal rendering with `significant` significant digits (defaults to
  // the value's own precision). Fixed notation for moderate exponents,
  // scientific otherwise.
  std::string to_string(int significant = 0) const;

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }

  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  mpfr_t value_;
  int digits_;
};

std::ostream& operator<<(std::ostream& os, const Real& r);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real sin(const Real& x);
Real pow(const Real& base, const Real& exponent);

// 10^k at the given precision.
Real pow10(long k, int digits);

// pi by the Gauss-Legendre AGM iteration and log 2 by Newton iteration on
// exp(y) = 2. Both are cached per binary precision.
Real pi(int digits);
Real log2_const(int digits);

}  // namespace lderiv
