#include "lderiv/periodic.hpp"

#include <string>

#include "lderiv/errors.hpp"

namespace lderiv {

PeriodicFunction::PeriodicFunction(std::int64_t q) : q_(q) {
  if (q < 1) throw ValidationError("period must be a positive integer, got " + std::to_string(q));
}

PeriodicFunction::PeriodicFunction(std::int64_t q, std::map<std::int64_t, Rational> values)
    : PeriodicFunction(q) {
  for (auto& [a, v] : values) {
    if (a < 1 || a > q) {
      throw ValidationError("residue " + std::to_string(a) + " outside 1.." + std::to_string(q));
    }
    if (!v.is_zero()) values_.emplace(a, std::move(v));
  }
}

Rational PeriodicFunction::operator()(std::int64_t a) const {
  std::int64_t r = mod_floor(a, q_);
  if (r == 0) r = q_;
  auto it = values_.find(r);
  return it == values_.end() ? Rational(0) : it->second;
}

PeriodicFunction operator*(const Rational& c, const PeriodicFunction& f) {
  std::map<std::int64_t, Rational> values;
  for (const auto& [a, v] : f.values()) values.emplace(a, c * v);
  return PeriodicFunction(f.period(), std::move(values));
}

PeriodicFunction operator+(const PeriodicFunction& f, const PeriodicFunction& g) {
  if (f.period() != g.period()) throw ValidationError("cannot add functions of different period");
  auto values = f.values();
  for (const auto& [a, v] : g.values()) values[a] += v;
  return PeriodicFunction(f.period(), std::move(values));
}

Validation validate(const PeriodicFunction& f) {
  const std::int64_t q = f.period();
  Validation out{true, true};
  for (const auto& [a, v] : f.values()) {
    if (gcd(a, q) != 1) out.dirichlet_type = false;
    if (a < q && f(q - a) != v) out.even = false;
  }
  return out;
}

void require_even_dirichlet(const PeriodicFunction& f, const char* operation) {
  const Validation v = validate(f);
  if (!v.even_dirichlet()) {
    throw ValidationError(std::string(operation) + " requires an even Dirichlet-type function (" +
                          (v.even ? "" : "not even") + (!v.even && !v.dirichlet_type ? ", " : "") +
                          (v.dirichlet_type ? "" : "not Dirichlet-type") + ")");
  }
}

PeriodicFunction from_character(const Character& chi, const Rational& c) {
  const std::int64_t q = chi.modulus();
  if (q > 1 && chi(q - 1) != 1) {
    throw ValidationError("odd character: chi(-1) = -1 cannot build an even function");
  }
  std::map<std::int64_t, Rational> values;
  for (std::int64_t s = 1; s <= q; ++s) {
    if (gcd(s, q) == 1) values.emplace(s, Rational(chi(s) - 1) + c);
  }
  return PeriodicFunction(q, std::move(values));
}

PeriodicFunction constant_on_units(std::int64_t q, const Rational& c) {
  if (q < 2) throw ValidationError("constant_on_units requires q >= 2");
  std::map<std::int64_t, Rational> values;
  for (std::int64_t a = 1; a <= q; ++a) {
    if (gcd(a, q) == 1) values.emplace(a, c);
  }
  return PeriodicFunction(q, std::move(values));
}

std::vector<std::int64_t> half_units(std::int64_t q) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; 2 * a <= q; ++a) {
    if (gcd(a, q) == 1) out.push_back(a);
  }
  return out;
}

std::vector<std::pair<std::int64_t, Rational>> half_support(const PeriodicFunction& f) {
  require_even_dirichlet(f, "half_support");
  std::vector<std::pair<std::int64_t, Rational>> out;
  for (std::int64_t a : half_units(f.period())) out.emplace_back(a, f(a));
  return out;
}

}  // namespace lderiv
