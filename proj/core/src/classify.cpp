#include "lderiv/classify.hpp"

#include <algorithm>
#include <string>

#include "lderiv/errors.hpp"
#include "lderiv/lseries.hpp"

namespace lderiv {

namespace {

std::string str(std::int64_t n) { return std::to_string(n); }

std::string power_str(const PrimePower& pp) {
  return pp.exponent == 1 ? str(pp.prime) : str(pp.prime) + "^" + str(pp.exponent);
}

// Records every condition it evaluates.
class Tracer {
 public:
  explicit Tracer(std::vector<TraceEntry>& out) : out_(out) {}

  bool is_prime_power(std::int64_t n) {
    return record(str(n) + " is a prime power", "is_prime_power", {n}, "",
                  lderiv::is_prime_power(n));
  }

  bool equals(std::string what, std::int64_t a, std::int64_t b) {
    return record(std::move(what), "equals", {a, b}, "", a == b);
  }

  bool congruent(std::int64_t a, std::int64_t r, std::int64_t m) {
    return record(str(a) + " = " + str(r) + " (mod " + str(m) + ")", "congruent", {a, r, m}, "",
                  mod_floor(a - r, m) == 0);
  }

  bool root(std::int64_t g, std::int64_t m, const std::string& modulus_text, RootType want) {
    const char* name = want == RootType::Primitive ? "primitive" : "semi-primitive";
    return record(str(g) + " " + name + " root mod " + modulus_text, "root_type", {g, m},
                  std::string(to_string(want)), root_type(g, m) == want);
  }

  bool order_equals(std::int64_t a, std::int64_t m, std::int64_t k) {
    return record("order of " + str(a) + " mod " + str(m) + " is " + str(k), "order_equals",
                  {a, m, k}, "", mult_order(a, m) == k);
  }

  bool gcd_equals(std::int64_t a, std::int64_t b, std::int64_t g) {
    return record("gcd(" + str(a) + ", " + str(b) + ") = " + str(g), "gcd_equals", {a, b, g}, "",
                  gcd(a, b) == g);
  }

  bool pairwise_coprime(std::vector<std::int64_t> xs) {
    bool ok = true;
    std::string text;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      text += (i ? ", " : "") + str(xs[i]);
      for (std::size_t j = i + 1; j < xs.size(); ++j) ok = ok && gcd(xs[i], xs[j]) == 1;
    }
    return record(text + " pairwise coprime", "pairwise_coprime", std::move(xs), "", ok);
  }

  bool shape(std::int64_t n, std::int64_t twos, std::int64_t odd_count, bool actual) {
    return record(str(n) + " = 2^" + str(twos) + " * " + str(odd_count) + " odd prime power(s)",
                  "shape", {n, twos, odd_count}, "", actual);
  }

 private:
  bool record(std::string check, std::string predicate, std::vector<std::int64_t> args,
              std::string expect, bool holds) {
    out_.push_back({std::move(check), std::move(predicate), std::move(args), std::move(expect),
                    holds});
    return holds;
  }

  std::vector<TraceEntry>& out_;
};

struct Split {
  int twos = 0;
  std::vector<PrimePower> odd;  // in the order supplied
};

Split split(const Factorization& factors) {
  Split s;
  for (const auto& pp : factors) {
    if (pp.prime == 2) {
      s.twos = pp.exponent;
    } else {
      s.odd.push_back(pp);
    }
  }
  return s;
}

bool two_root(Tracer& t, const PrimePower& p, bool allow_semi_3mod4, std::string& sub,
              const char* roman) {
  const std::int64_t m = p.value();
  if (t.root(2, m, power_str(p), RootType::Primitive)) {
    sub = std::string(roman) + ",1";
    return true;
  }
  if (allow_semi_3mod4 && t.root(2, m, power_str(p), RootType::SemiPrimitive) &&
      t.congruent(p.prime, 3, 4)) {
    sub = std::string(roman) + ",2";
    return true;
  }
  return false;
}

// m = 4 p^a.
bool shape_one(Tracer& t, const Split& s, std::string& sub) {
  return two_root(t, s.odd[0], true, sub, "I");
}

// m = 2^e p^a with e >= 3.
bool shape_two(Tracer& t, const Split& s, std::string& sub) {
  const std::int64_t p = s.odd[0].prime;
  const std::int64_t two_e = std::int64_t{1} << s.twos;
  if (!t.order_equals(p, two_e, std::int64_t{1} << (s.twos - 2))) return false;
  const std::int64_t lhs = (std::int64_t{1} << (s.twos - 3)) * p;
  if (t.congruent(lhs, two_e - 1, two_e)) return false;
  return two_root(t, s.odd[0], true, sub, "II");
}

// m = p1^a1 p2^a2.
bool shape_three(Tracer& t, const Split& s, std::string& sub) {
  const auto& p1 = s.odd[0];
  const auto& p2 = s.odd[1];
  const bool both_3mod4 = t.congruent(p1.prime, 3, 4) && t.congruent(p2.prime, 3, 4);
  const RootType want = both_3mod4 ? RootType::SemiPrimitive : RootType::Primitive;
  if (t.root(p1.prime, p2.value(), power_str(p2), want) &&
      t.root(p2.prime, p1.value(), power_str(p1), want)) {
    sub = both_3mod4 ? "III,1" : "III,2";
    return true;
  }
  return false;
}

// m = 4 p1^a1 p2^a2.
bool shape_four(Tracer& t, const Split& s, std::string& sub) {
  const auto& p1 = s.odd[0];
  const auto& p2 = s.odd[1];
  if (!t.gcd_equals(p1.prime - 1, p2.prime - 1, 2)) return false;
  const bool p1_3 = t.congruent(p1.prime, 3, 4);
  const bool p2_3 = t.congruent(p2.prime, 3, 4);
  if (p1_3 && p2_3) {
    auto two_split = [&](const PrimePower& x, const PrimePower& y) {
      return t.root(2, x.value(), power_str(x), RootType::Primitive) &&
             t.root(2, y.value(), power_str(y), RootType::SemiPrimitive);
    };
    auto cross = [&](const PrimePower& x, const PrimePower& y) {
      return t.root(x.prime, 2 * y.value(), "2*" + power_str(y), RootType::Primitive) &&
             t.root(y.prime, 2 * x.value(), "2*" + power_str(x), RootType::SemiPrimitive);
    };
    if ((two_split(p1, p2) || two_split(p2, p1)) && (cross(p1, p2) || cross(p2, p1))) {
      sub = "IV,1";
      return true;
    }
    return false;
  }
  if (p1_3 == p2_3) return false;  // both 1 mod 4
  const PrimePower& one_mod_4 = p1_3 ? p2 : p1;
  const PrimePower& three_mod_4 = p1_3 ? p1 : p2;
  if (t.root(2, three_mod_4.value(), power_str(three_mod_4), RootType::Primitive) &&
      t.root(one_mod_4.prime, three_mod_4.value(), power_str(three_mod_4),
             RootType::Primitive) &&
      t.root(three_mod_4.prime, one_mod_4.value(), power_str(one_mod_4), RootType::Primitive)) {
    sub = "IV,2";
    return true;
  }
  return false;
}

// m = p1^a1 p2^a2 p3^a3, all p_i = 3 (mod 4).
bool shape_five(Tracer& t, const Split& s, std::string& sub) {
  for (const auto& p : s.odd) {
    if (!t.congruent(p.prime, 3, 4)) return false;
  }
  if (!t.pairwise_coprime({(s.odd[0].prime - 1) / 2, (s.odd[1].prime - 1) / 2,
                           (s.odd[2].prime - 1) / 2})) {
    return false;
  }
  // x, y, z primitive mod y, z, x and semi-primitive mod z, x, y, for
  // either cyclic orientation of the three primes.
  auto cyclic = [&](const PrimePower& x, const PrimePower& y, const PrimePower& z) {
    return t.root(x.prime, y.value(), power_str(y), RootType::Primitive) &&
           t.root(y.prime, z.value(), power_str(z), RootType::Primitive) &&
           t.root(z.prime, x.value(), power_str(x), RootType::Primitive) &&
           t.root(x.prime, z.value(), power_str(z), RootType::SemiPrimitive) &&
           t.root(y.prime, x.value(), power_str(x), RootType::SemiPrimitive) &&
           t.root(z.prime, y.value(), power_str(y), RootType::SemiPrimitive);
  };
  if (cyclic(s.odd[0], s.odd[1], s.odd[2]) || cyclic(s.odd[0], s.odd[2], s.odd[1])) {
    sub = "V,1";
    return true;
  }
  return false;
}

// Pei-Feng ladder on m with m != 2 (mod 4); returns the sub-case or "".
std::string pei_feng(Tracer& t, std::int64_t m, const Factorization& factors) {
  const Split s = split(factors);
  const auto k = static_cast<std::int64_t>(s.odd.size());
  std::string sub;
  if (t.shape(m, 2, 1, s.twos == 2 && k == 1) && shape_one(t, s, sub)) return sub;
  if (t.shape(m, s.twos >= 3 ? s.twos : 3, 1, s.twos >= 3 && k == 1) && shape_two(t, s, sub)) {
    return sub;
  }
  if (t.shape(m, 0, 2, s.twos == 0 && k == 2) && shape_three(t, s, sub)) return sub;
  if (t.shape(m, 2, 2, s.twos == 2 && k == 2) && shape_four(t, s, sub)) return sub;
  if (t.shape(m, 0, 3, s.twos == 0 && k == 3) && shape_five(t, s, sub)) return sub;
  return "";
}

Factorization halve(const Factorization& factors) {
  Factorization out;
  for (const auto& pp : factors) {
    if (pp.prime == 2) {
      if (pp.exponent > 1) out.push_back({2, pp.exponent - 1});
    } else {
      out.push_back(pp);
    }
  }
  return out;
}

void check_factorization(std::int64_t q, const Factorization& factors) {
  std::int64_t product = 1;
  for (const auto& pp : factors) {
    if (!is_prime(pp.prime) || pp.exponent < 1) {
      throw ValidationError("factorization entry is not a prime power");
    }
    product *= pp.value();
  }
  auto sorted = factors;
  std::sort(sorted.begin(), sorted.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  if (product != q || std::adjacent_find(sorted.begin(), sorted.end(),
                                         [](const PrimePower& a, const PrimePower& b) {
                                           return a.prime == b.prime;
                                         }) != sorted.end()) {
    throw ValidationError("factorization does not match " + std::to_string(q));
  }
}

}  // namespace

std::string_view to_string(ModulusCase c) {
  switch (c) {
    case ModulusCase::PrimePower:
      return "PrimePower";
    case ModulusCase::QSix:
      return "QSix";
    case ModulusCase::PeiFeng:
      return "PeiFeng";
    case ModulusCase::TwoPNPower:
      return "TwoPNPower";
    case ModulusCase::TwoTimesPeiFeng:
      return "TwoTimesPeiFeng";
    case ModulusCase::Uncovered:
      return "Uncovered";
  }
  return "Uncovered";
}

std::string Classification::label() const {
  std::string out(to_string(kind));
  if (!subcase.empty()) out += "(" + subcase + ")";
  return out;
}

Classification classify_modulus(std::int64_t q) {
  if (q < 2) throw ValidationError("classify_modulus requires q >= 2, got " + std::to_string(q));
  return classify_modulus(q, factorize(q));
}

Classification classify_modulus(std::int64_t q, const Factorization& factors) {
  if (q < 2) throw ValidationError("classify_modulus requires q >= 2, got " + std::to_string(q));
  check_factorization(q, factors);
  Classification c;
  c.q = q;
  Tracer t(c.trace);

  if (t.is_prime_power(q)) {
    c.kind = ModulusCase::PrimePower;
  } else if (t.equals("q = 6", q, 6)) {
    c.kind = ModulusCase::QSix;
  } else if (t.congruent(q, 2, 4)) {
    const std::int64_t m = q / 2;
    const Split half = split(halve(factors));
    std::string sub;
    const bool three = t.shape(m, 0, 2, half.odd.size() == 2) && shape_three(t, half, sub);
    const bool five = !three && t.shape(m, 0, 3, half.odd.size() == 3) && shape_five(t, half, sub);
    if (three || five) {
      c.kind = ModulusCase::TwoTimesPeiFeng;
      c.subcase = three ? "III" : "V";
    } else if (t.is_prime_power(m)) {
      c.kind = ModulusCase::TwoPNPower;
    }
  } else {
    c.subcase = pei_feng(t, q, factors);
    if (!c.subcase.empty()) c.kind = ModulusCase::PeiFeng;
  }

  c.independent_excluding_one = c.kind != ModulusCase::Uncovered;
  c.independent_including_one = c.kind == ModulusCase::PrimePower || c.kind == ModulusCase::QSix;
  return c;
}

std::string_view to_string(VanishingKind k) {
  switch (k) {
    case VanishingKind::ZeroIffZeroFunction:
      return "ZeroIffZeroFunction";
    case VanishingKind::ZeroIffConstantOnUnits:
      return "ZeroIffConstantOnUnits";
    case VanishingKind::AlwaysZero:
      return "AlwaysZero";
    case VanishingKind::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

std::string VanishingVerdict::statement() const {
  if (!predicts_zero) return "undetermined";
  return *predicts_zero ? "L'(0,f) = 0" : "L'(0,f) != 0 (transcendental)";
}

VanishingVerdict vanishing_verdict(std::int64_t q, const PeriodicFunction& f, int digits) {
  if (f.period() != q) {
    throw ValidationError("vanishing_verdict: f has period " + std::to_string(f.period()) +
                          ", expected " + std::to_string(q));
  }
  require_even_dirichlet(f, "vanishing_verdict");
  const Classification c = classify_modulus(q);
  VanishingVerdict v;
  switch (c.kind) {
    case ModulusCase::PrimePower:
      v.kind = VanishingKind::ZeroIffZeroFunction;
      v.applied_theorem = "prime-power-independence";
      v.predicts_zero = f.is_zero();
      break;
    case ModulusCase::PeiFeng: {
      v.kind = VanishingKind::ZeroIffConstantOnUnits;
      v.applied_theorem = "pei-feng-independence";
      const auto terms = half_support(f);
      v.predicts_zero = std::all_of(terms.begin(), terms.end(),
                                    [&](const auto& t) { return t.second == terms[0].second; });
      break;
    }
    case ModulusCase::QSix:
      v.kind = VanishingKind::AlwaysZero;
      v.applied_theorem = "q6-degeneracy";
      v.predicts_zero = true;
      break;
    default:
      v.kind = VanishingKind::Unknown;
      v.applied_theorem = "none";
      v.numeric_residual = abs(l_deriv0_even(f, digits));
      break;
  }
  return v;
}

}  // namespace lderiv
