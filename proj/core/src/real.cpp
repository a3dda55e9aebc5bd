#include "lderiv/real.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <utility>

#include "lderiv/errors.hpp"

namespace lderiv {

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

void check_digits(int digits) {
  if (digits < kMinDigits) {
    throw ValidationError("precision must be at least " + std::to_string(kMinDigits) +
                          " digits, got " + std::to_string(digits));
  }
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(long numerator) : value_(numerator) {}

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(mpz_class numerator, mpz_class denominator) {
  if (denominator == 0) throw ValidationError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&]() { return ValidationError("malformed rational '" + s + "'"); };
  auto parse_int = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) throw bad();
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw bad();
    for (std::size_t j = i; j < part.size(); ++j) {
      if (part[j] < '0' || part[j] > '9') throw bad();
    }
    return mpz_class(part[0] == '+' ? part.substr(1) : part, 10);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s, true), mpz_class(1));
  mpz_class num = parse_int(s.substr(0, slash), true);
  mpz_class den = parse_int(s.substr(slash + 1), false);
  if (den == 0) throw bad();
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ValidationError("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------
// Real

Real::Real(int digits) : digits_(digits) {
  check_digits(digits);
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, int digits) : Real(digits) { mpfr_set_si(value_, value, MPFR_RNDN); }

Real::Real(const Rational& value, int digits) : Real(digits) {
  mpfr_set_q(value_, value.get().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const mpz_class& value, int digits) : Real(digits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view text, int digits) {
  Real r(digits);
  std::string s(text);
  if (s.empty() || mpfr_set_str(r.value_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw ValidationError("malformed real number '" + s + "'");
  }
  return r;
}

Real::Real(const Real& o) : digits_(o.digits_) {
  mpfr_init2(value_, mpfr_get_prec(o.value_));
  mpfr_set(value_, o.value_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : digits_(o.digits_) {
  // Leave the source as a valid minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, o.value_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(value_, mpfr_get_prec(o.value_));
    mpfr_set(value_, o.value_, MPFR_RNDN);
    digits_ = o.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(value_, o.value_);
  std::swap(digits_, o.digits_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_digits(int digits) const {
  Real r(digits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

double Real::log10_abs() const {
  if (is_zero()) return -INFINITY;
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_abs(t, value_, MPFR_RNDN);
  mpfr_log10(t, t, MPFR_RNDN);
  double out = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return out;
}

std::string Real::to_string(int significant) const {
  if (significant <= 0) significant = digits_;
  if (mpfr_zero_p(value_)) return "0";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", significant, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

namespace {

void grow_to(Real& a, const Real& b) {
  if (b.digits() > a.digits()) a = a.with_digits(b.digits());
}

}  // namespace

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) {
  grow_to(*this, o);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  grow_to(*this, o);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  grow_to(*this, o);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  grow_to(*this, o);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long o) {
  mpfr_mul_si(value_, value_, o, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long o) {
  mpfr_div_si(value_, value_, o, MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const Real& r) { return os << r.to_string(); }

Real abs(const Real& x) {
  Real r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  if (x.sign() <= 0) throw ValidationError("log of a non-positive number");
  Real r(x);
  mpfr_log(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x);
  mpfr_exp(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real sin(const Real& x) {
  Real r(x);
  mpfr_sin(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Real& exponent) {
  Real r(std::max(base.digits(), exponent.digits()));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

Real pow10(long k, int digits) {
  Real r(10, digits);
  mpfr_pow_si(r.get(), r.get(), k, MPFR_RNDN);
  return r;
}

namespace {

struct ConstantCache {
  std::mutex mutex;
  std::map<int, Real> values;
};

template <typename Compute>
Real cached_constant(ConstantCache& cache, int digits, Compute compute) {
  check_digits(digits);
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.values.find(digits);
    if (it != cache.values.end()) return it->second;
  }
  Real value = compute(digits);
  std::lock_guard lock(cache.mutex);
  cache.values.emplace(digits, value);
  return value;
}

Real gauss_legendre_pi(int digits) {
  const int wd = digits + 10;
  Real a(1, wd);
  Real b = sqrt(Real(Rational(1, 2), wd));
  Real t(Rational(1, 4), wd);
  Real p(1, wd);
  Real tol = pow10(-wd, wd);
  for (int iter = 0; iter < 64; ++iter) {
    Real next_a = (a + b) / 2;
    b = sqrt(a * b);
    Real diff = a - next_a;
    t -= p * diff * diff;
    p *= 2;
    a = std::move(next_a);
    if (abs(a - b) < tol) break;
  }
  Real sum = a + b;
  return (sum * sum / (t * 4)).with_digits(digits);
}

Real newton_log2(int digits) {
  const int wd = digits + 10;
  Real y = Real::parse("0.6931471805599453", wd);
  Real two(2, wd);
  Real tol = pow10(-wd, wd);
  for (int iter = 0; iter < 64; ++iter) {
    // y <- y - 1 + 2 exp(-y)
    Real step = two * exp(-y) - Real(1, wd);
    y += step;
    if (abs(step) < tol) break;
  }
  return y.with_digits(digits);
}

}  // namespace

Real pi(int digits) {
  static ConstantCache cache;
  return cached_constant(cache, digits, gauss_legendre_pi);
}

Real log2_const(int digits) {
  static ConstantCache cache;
  return cached_constant(cache, digits, newton_log2);
}

}  // namespace lderiv
