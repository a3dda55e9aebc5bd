#include <doctest.h>

#include <algorithm>
#include <random>

#include "lderiv/classify.hpp"
#include "lderiv/errors.hpp"
#include "lderiv/lseries.hpp"
#include "oracles.hpp"

using namespace lderiv;

namespace {

// Re-evaluates a trace entry from the arith primitives alone.
bool replay(const TraceEntry& e) {
  const auto& a = e.args;
  if (e.predicate == "is_prime_power") return is_prime_power(a.at(0));
  if (e.predicate == "equals") return a.at(0) == a.at(1);
  if (e.predicate == "congruent") return ((a.at(0) - a.at(1)) % a.at(2) + a.at(2)) % a.at(2) == 0;
  if (e.predicate == "root_type") return to_string(root_type(a.at(0), a.at(1))) == e.expect;
  if (e.predicate == "order_equals") return oracle::naive_order(a.at(0), a.at(1)) == a.at(2);
  if (e.predicate == "gcd_equals") return oracle::naive_gcd(a.at(0), a.at(1)) == a.at(2);
  if (e.predicate == "pairwise_coprime") {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        if (oracle::naive_gcd(a[i], a[j]) != 1) return false;
      }
    }
    return true;
  }
  if (e.predicate == "shape") {
    std::int64_t n = a.at(0), twos = 0, odd = 0;
    while (n % 2 == 0) n /= 2, ++twos;
    for (std::int64_t p = 3; n > 1; p += 2) {
      if (n % p != 0) continue;
      ++odd;
      while (n % p == 0) n /= p;
    }
    return twos == a.at(1) && odd == a.at(2);
  }
  FAIL("unknown predicate " << e.predicate);
  return false;
}

PeriodicFunction random_even(std::int64_t q, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-3, 3);
  std::map<std::int64_t, Rational> m;
  for (std::int64_t a : half_units(q)) {
    const Rational v(dist(rng));
    m[a] = v;
    m[q - a] = v;
  }
  return PeriodicFunction(q, m);
}

}  // namespace

TEST_CASE("classification table") {
  const std::vector<std::pair<std::int64_t, std::string>> table{
      {9, "PrimePower"},           {6, "QSix"},
      {12, "PeiFeng(I,1)"},        {45, "PeiFeng(III,2)"},
      {90, "TwoTimesPeiFeng(III)"}, {10, "TwoPNPower"},
      {155, "Uncovered"},          {2, "PrimePower"},
      {4, "PrimePower"},           {28, "PeiFeng(I,2)"},
      {105, "Uncovered"}};
  for (const auto& [q, label] : table) {
    CAPTURE(q);
    CHECK(classify_modulus(q).label() == label);
  }
  CHECK_THROWS_AS(classify_modulus(1), ValidationError);
}

TEST_CASE("independence flags") {
  for (std::int64_t q = 2; q <= 400; ++q) {
    const auto c = classify_modulus(q);
    CHECK(c.independent_including_one == (is_prime_power(q) || q == 6));
    CHECK(c.independent_excluding_one == (c.kind != ModulusCase::Uncovered));
  }
}

TEST_CASE("155 fails every condition") {
  const auto c = classify_modulus(155);
  CHECK(c.kind == ModulusCase::Uncovered);
  CHECK_FALSE(c.trace.empty());
  // 5 has order 3 mod 31, so it is neither primitive nor semi-primitive.
  const bool saw = std::any_of(c.trace.begin(), c.trace.end(), [](const TraceEntry& e) {
    return e.predicate == "root_type" && e.args == std::vector<std::int64_t>{5, 31} && !e.holds;
  });
  CHECK(saw);
}

TEST_CASE("every trace entry replays") {
  for (std::int64_t q = 2; q <= 3000; ++q) {
    for (const auto& e : classify_modulus(q).trace) {
      CAPTURE(q);
      CAPTURE(e.check);
      CHECK(replay(e) == e.holds);
    }
  }
}

TEST_CASE("factor order does not change the verdict") {
  std::mt19937_64 rng(41);
  for (std::int64_t q = 2; q <= 3000; ++q) {
    const auto base = classify_modulus(q);
    auto factors = factorize(q);
    for (int k = 0; k < 3; ++k) {
      std::shuffle(factors.begin(), factors.end(), rng);
      const auto c = classify_modulus(q, factors);
      CHECK(c.kind == base.kind);
      CHECK(c.subcase == base.subcase);
    }
  }
  CHECK_THROWS_AS(classify_modulus(12, Factorization{{2, 2}, {5, 1}}), ValidationError);
  CHECK_THROWS_AS(classify_modulus(12, Factorization{{4, 1}, {3, 1}}), ValidationError);
}

TEST_CASE("vanishing verdicts") {
  const int d = 40;
  auto v = vanishing_verdict(9, PeriodicFunction(9), d);
  CHECK(v.kind == VanishingKind::ZeroIffZeroFunction);
  CHECK(v.predicts_zero == std::optional<bool>(true));
  CHECK(v.applied_theorem == "prime-power-independence");
  v = vanishing_verdict(12, constant_on_units(12, Rational(3)), d);
  CHECK(v.kind == VanishingKind::ZeroIffConstantOnUnits);
  CHECK(v.predicts_zero == std::optional<bool>(true));
  v = vanishing_verdict(6, constant_on_units(6, Rational(5)), d);
  CHECK(v.kind == VanishingKind::AlwaysZero);
  CHECK(v.statement() == "L'(0,f) = 0");
  const auto w = from_character(lift_character(quadratic_character(5), 155), Rational(0));
  v = vanishing_verdict(155, w, d);
  CHECK(v.kind == VanishingKind::Unknown);
  CHECK(v.applied_theorem == "none");
  CHECK_FALSE(v.predicts_zero.has_value());
  REQUIRE(v.numeric_residual.has_value());
  CHECK(oracle::small(*v.numeric_residual, -d + 10));
  CHECK_THROWS_AS(vanishing_verdict(5, PeriodicFunction(5, {{1, Rational(1)}}), d),
                  ValidationError);
  CHECK_THROWS_AS(vanishing_verdict(7, PeriodicFunction(5), d), ValidationError);
}

TEST_CASE("verdicts agree with numerics") {
  std::mt19937_64 rng(101);
  const int d = 60;
  const Real threshold = pow10(-50, d);
  int checked = 0;
  for (std::int64_t q = 2; q <= 100; ++q) {
    for (int trial = 0; trial < 4; ++trial) {
      const PeriodicFunction f =
          trial == 0 ? constant_on_units(q, Rational(trial + 2)) : random_even(q, rng);
      const auto v = vanishing_verdict(q, f, d);
      if (!v.predicts_zero) continue;
      CAPTURE(q);
      CAPTURE(digest(f));
      const bool numerically_zero = abs(l_deriv0_even(f, d)) < threshold;
      CHECK(numerically_zero == *v.predicts_zero);
      ++checked;
    }
  }
  CHECK(checked > 200);
}
