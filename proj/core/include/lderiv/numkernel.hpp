#pragma once

#include <cstdint>

#include "lderiv/real.hpp"

namespace lderiv {

// Bernoulli number B_n with B_1 = -1/2. Thread-safe; the table is filled
// on demand and cached, so repeated calls are O(1).
Rational bernoulli(int n);

// 2 sin(a pi / q) for 1 <= a < q; always positive.
Real two_sin_pi(std::int64_t a, std::int64_t q, int digits);

// log Gamma(a/q) for a >= 1, q >= 1 via an argument-shifted Stirling series.
Real log_gamma_frac(std::int64_t a, std::int64_t q, int digits);

struct EulerMaclaurinOptions {
  // Give up (ConvergenceError) once the shift N would exceed
  // max_shift_factor * digits.
  int max_shift_factor = 64;
};

// Hurwitz zeta(s, x) for real s != 1 and rational 0 < x <= 1, to `digits`
// decimal digits (absolute), by Euler-Maclaurin summation.
Real hurwitz_zeta(const Real& s, const Rational& x, int digits,
                  const EulerMaclaurinOptions& options = {});

// d/ds zeta(s, x), by term-wise differentiation of the same expansion.
Real hurwitz_zeta_ds(const Real& s, const Rational& x, int digits,
                     const EulerMaclaurinOptions& options = {});

}  // namespace lderiv
