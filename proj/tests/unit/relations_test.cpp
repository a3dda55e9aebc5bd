#include <doctest.h>

#include "lderiv/errors.hpp"
#include "lderiv/json_io.hpp"
#include "lderiv/numkernel.hpp"
#include "lderiv/relations.hpp"
#include "oracles.hpp"

using namespace lderiv;

namespace {

std::vector<std::int64_t> residues(const LogSineBasis& b) {
  std::vector<std::int64_t> out;
  for (const auto& e : b.entries) out.push_back(e.a);
  return out;
}

RelationProblem constants(std::vector<std::string> labels,
                          std::function<std::vector<Real>(int)> evaluate) {
  return {std::move(labels), std::move(evaluate)};
}

}  // namespace

TEST_CASE("basis membership") {
  auto b = log_sine_basis(12, 50);
  CHECK(residues(b) == std::vector<std::int64_t>{1, 5});
  CHECK(b.excluded.empty());
  b = log_sine_basis(6, 50);
  CHECK(b.entries.empty());
  CHECK(b.excluded == std::vector<std::int64_t>{1});
  b = log_sine_basis(9, 50);
  CHECK(residues(b) == std::vector<std::int64_t>{1, 2, 4});
  CHECK_FALSE(b.extended());
  b = log_sine_basis(9, 50, true);
  CHECK(b.size() == 5);
  CHECK(b.labels() == std::vector<std::string>{"a=1", "a=2", "a=4", "pi", "log2"});
  b = log_sine_basis(155, 50, LogSineOptions{false, true});
  CHECK(b.entries.front().a == 2);
  CHECK(b.entries.size() == 59);
  CHECK_THROWS_AS(log_sine_basis(2, 50), ValidationError);
}

TEST_CASE("basis exclusions are exactly the power-of-two sines") {
  for (std::int64_t q = 3; q <= 120; ++q) {
    const auto b = log_sine_basis(q, 30);
    for (std::int64_t a : b.excluded) CHECK((6 * a == q || 4 * a == q));
    for (const auto& e : b.entries) CHECK((6 * e.a != q && 4 * e.a != q));
    if (is_prime_power(q)) {
      for (std::int64_t a : b.excluded) CHECK(6 * a != q);
    }
    CHECK(b.entries.size() + b.excluded.size() == half_units(q).size());
  }
}

TEST_CASE("basis values") {
  const int d = 50;
  const auto b = log_sine_basis(35, d, true);
  for (const auto& e : b.entries) {
    CHECK(oracle::near(e.value, log(oracle::two_sin(e.a, 35, d)), -d + 3));
  }
  CHECK(oracle::near(*b.pi, oracle::pi(d), -d + 1));
  CHECK(oracle::near(*b.log2, oracle::log2(d), -d + 1));
}

TEST_CASE("sine product identity") {
  const int d = 50;
  for (std::int64_t q : {12, 15, 21, 45, 155, 6, 10, 30, 210}) {
    CAPTURE(q);
    CHECK(oracle::small(sine_identity_residual(q, d), -d + 5));
  }
  for (auto [q, p] : std::vector<std::pair<std::int64_t, long>>{
           {3, 3}, {4, 2}, {9, 3}, {25, 5}, {27, 3}, {49, 7}, {64, 2}}) {
    CAPTURE(q);
    CHECK(oracle::near(sine_identity_residual(q, d), log(Real(p, d)), -d + 5));
  }
}

TEST_CASE("generic relations") {
  const auto logs = [](std::vector<long> xs) {
    return [xs](int d) {
      std::vector<Real> out;
      for (long x : xs) out.push_back(log(Real(x, d)));
      return out;
    };
  };
  auto r = find_integer_relation(constants({"log2", "log4"}, logs({2, 4})), 100, 50);
  REQUIRE(r.has_value());
  CHECK(r->coefficients == std::vector<mpz_class>{2, -1});
  CHECK(r->verified_at_2d);
  CHECK(r->residual_at_2d < pow10(-90, 100));
  CHECK_FALSE(find_integer_relation(constants({"log2", "log3"}, logs({2, 3})), 1000000, 50));
  r = find_integer_relation(constants({"a", "b", "c"}, logs({6, 2, 3})), 10, 40);
  REQUIRE(r.has_value());
  CHECK(r->coefficients == std::vector<mpz_class>{1, -1, -1});
  // Coefficient bound is enforced.
  CHECK_FALSE(find_integer_relation(constants({"a", "b"}, logs({2, 1024})), 5, 50));
}

TEST_CASE("relation finder errors") {
  auto one = constants({"x"}, [](int d) { return std::vector<Real>{Real(1, d)}; });
  CHECK_THROWS_AS(find_integer_relation(one, 10, 50), ValidationError);
  auto tiny = constants({"x", "y"}, [](int d) {
    return std::vector<Real>{pow10(-60, d), pow10(-70, d)};
  });
  CHECK_THROWS_AS(find_integer_relation(tiny, 10, 40), PrecisionError);
  auto pair = constants({"x", "y"}, [](int d) { return std::vector<Real>{Real(1, d), Real(2, d)}; });
  CHECK_THROWS_AS(find_integer_relation(pair, 10, 10), PrecisionError);
  CHECK_THROWS_AS(find_integer_relation(pair, 0, 30), ValidationError);
}

TEST_CASE("accepted relations re-verify at doubled precision") {
  for (std::int64_t q : {15, 21, 35, 39}) {
    const int d = 60;
    const auto r = find_integer_relation(log_sine_basis(q, d, true), 20, d);
    if (!r) continue;
    CAPTURE(q);
    CHECK(r->residual_at_2d < pow10(-2 * d + 10, 2 * d));
    // Independent recomputation through the oracle sine.
    Real sum(0, 2 * d);
    for (const auto& [a, c] : r->residue_coefficients()) {
      sum += Real(c, 2 * d) * log(oracle::two_sin(a, q, 2 * d));
    }
    const auto labels = r->labels;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == "pi") sum += Real(r->coefficients[i], 2 * d) * oracle::pi(2 * d);
      if (labels[i] == "log2") sum += Real(r->coefficients[i], 2 * d) * oracle::log2(2 * d);
    }
    CHECK(oracle::small(sum, -2 * d + 12));
  }
}

TEST_CASE("prime power bases carry no small relation") {
  for (std::int64_t q : {9, 11, 13, 25, 27}) {
    CAPTURE(q);
    CHECK_FALSE(find_integer_relation(log_sine_basis(q, 100), 1000000, 100).has_value());
  }
}

TEST_CASE("admissibility") {
  CHECK(ramachandra_admissible(155) == std::make_pair<std::int64_t, std::int64_t>(5, 31));
  CHECK(ramachandra_admissible(55) == std::make_pair<std::int64_t, std::int64_t>(5, 11));
  CHECK(ramachandra_admissible(110) == std::make_pair<std::int64_t, std::int64_t>(5, 11));
  CHECK_FALSE(ramachandra_admissible(105));
  CHECK_FALSE(ramachandra_admissible(21));  // 7 = 1 mod 3, but 3 is 3 mod 4
  CHECK_FALSE(ramachandra_admissible(25));
  CHECK_FALSE(ramachandra_admissible(2));
  CHECK(ramachandra_admissible(13 * 53) == std::make_pair<std::int64_t, std::int64_t>(13, 53));
}

TEST_CASE("witnesses vanish") {
  const int d = 60;
  for (std::int64_t q : {55, 155, 110, 65 * 11}) {
    CAPTURE(q);
    const auto w = build_witness(q, Rational(0), d);
    CHECK(w.half_sum == -1);
    CHECK(validate(w.f).even_dirichlet());
    CHECK(oracle::small(w.residual, -d + 10));
  }
  CHECK_THROWS_AS(build_witness(105, Rational(0), d), ValidationError);
}

TEST_CASE("witness residual is shift invariant") {
  const int d = 60;
  const auto w0 = build_witness(155, Rational(0), d);
  const auto w7 = build_witness(155, Rational(7), d);
  const auto wq = build_witness(155, Rational(-5, 3), d);
  CHECK(w7.f(1) == Rational(7));
  CHECK(oracle::near(w0.residual, w7.residual, -d + 10));
  CHECK(oracle::near(w0.residual, wq.residual, -d + 10));
}

TEST_CASE("witness coefficients and span test") {
  const Character chi = lift_character(quadratic_character(5), 55);
  const auto full = witness_coefficients(chi, false);
  CHECK(full.size() == 20);
  CHECK(full[0] == 0);
  CHECK(full[1] == -2);
  const auto tail = witness_coefficients(chi, true);
  CHECK(tail.size() == 19);
  std::vector<mpz_class> half(tail.size());
  for (std::size_t i = 0; i < tail.size(); ++i) half[i] = tail[i] / -2;
  CHECK(in_rational_span(half, tail));
  half[0] += 1;
  CHECK_FALSE(in_rational_span(half, tail));
  CHECK_FALSE(in_rational_span({1, 2}, {1, 2, 3}));
}

TEST_CASE("q = 55 finder recovers the witness relation") {
  const int d = 60;
  const auto basis = log_sine_basis(55, d, LogSineOptions{false, true});
  const auto r = find_integer_relation(basis, 4, d);
  REQUIRE(r.has_value());
  const Character chi = lift_character(quadratic_character(5), 55);
  CHECK(in_rational_span(r->coefficients, witness_coefficients(chi, true)));
}

TEST_CASE("relation JSON") {
  const auto r = find_integer_relation(log_sine_basis(55, 40, LogSineOptions{false, true}), 4, 40);
  REQUIRE(r.has_value());
  const Json j = to_json(*r);
  CHECK(j["labels"][0] == "a=2");
  CHECK(j["coefficients"][0].is_number_integer());
  CHECK(j["digits"] == 40);
  CHECK(j["verified_at_2d"] == true);
  CHECK(j["residual_at_2d"]["value"].is_string());
  CHECK(dump(Json::parse(dump(j))) == dump(j));
  const Json b = to_json(log_sine_basis(12, 20, true));
  CHECK(b["entries"].size() == 4);
  CHECK(b["entries"][2]["label"] == "pi");
  CHECK(b["entries"][2]["value"].get<std::string>().substr(0, 12) == "3.1415926535");
}
