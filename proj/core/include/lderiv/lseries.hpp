#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lderiv/periodic.hpp"
#include "lderiv/real.hpp"

namespace lderiv {

enum class LMethod { HurwitzSum, ClosedForm0, EvenReduced0 };

std::string_view to_string(LMethod m);

// One evaluated special value. `derivative` distinguishes L'(s, f) from
// L(s, f); ClosedForm0 and EvenReduced0 only occur with s = 0.
struct LValue {
  Real value;
  Real s;
  std::string f_digest;
  LMethod method;
  bool derivative;
};

// L(s, f) = q^-s sum_{a=1}^{q} f(a) zeta(s, a/q). Throws PoleError at s = 1.
Real l_value(const Real& s, const PeriodicFunction& f, int digits);

// L'(s, f) = -log q q^-s sum f(a) zeta(s, a/q) + q^-s sum f(a) zeta'(s, a/q).
Real l_deriv(const Real& s, const PeriodicFunction& f, int digits);

// L'(0, f) from the Lerch identities:
// -log q sum f(a)(1/2 - a/q) + sum f(a) log Gamma(a/q) - 1/2 log(2 pi) sum f(a).
// Valid for any periodic f.
Real l_deriv0_closed(const PeriodicFunction& f, int digits);

// L'(0, f) = -sum_{a <= q/2, (a,q)=1} f(a) log(2 sin(a pi / q)) for even
// Dirichlet-type f with q >= 2. The self-paired residue a = q/2 (q = 2)
// carries weight 1/2.
Real l_deriv0_even(const PeriodicFunction& f, int digits);

// Exact sum_{a=1}^{q} f(a) (1/2 - a/q); zero for every even Dirichlet-type f.
Rational lerch_first_term(const PeriodicFunction& f);

// L'(0, f) via EvenReduced0 when f is even Dirichlet-type and q >= 2,
// otherwise ClosedForm0; L(s, f) via HurwitzSum when s != 0.
LValue evaluate(const Real& s, const PeriodicFunction& f, int digits);

struct FamilyRank {
  std::size_t rank = 0;
  bool independent = true;
  // Integer c with sum c_i f_i = 0, present iff dependent.
  std::optional<std::vector<mpz_class>> certificate;
};

// Rank of the functions over Q, computed exactly on half-support columns.
// All f_i must be even Dirichlet-type with one common prime-power period;
// for such q the values L'(0, f_i) are independent iff the f_i are.
FamilyRank family_rank(const std::vector<PeriodicFunction>& fs);

// Stable content hash of f (16 hex digits).
std::string digest(const PeriodicFunction& f);

}  // namespace lderiv
