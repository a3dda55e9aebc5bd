#include "lderiv/json_io.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "lderiv/errors.hpp"

namespace lderiv {

namespace {

constexpr int kResidualDigits = 6;

Json integer(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json integers(const std::vector<mpz_class>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(integer(v));
  return out;
}

std::int64_t parse_residue(const std::string& key) {
  auto bad = [&] { return ValidationError("values: key '" + key + "' is not a residue"); };
  if (key.empty() || key.size() > 18) throw bad();
  for (char ch : key) {
    if (ch < '0' || ch > '9') throw bad();
  }
  if (key.size() > 1 && key[0] == '0') throw bad();
  return std::stoll(key);
}

}  // namespace

Json to_json(const PeriodicFunction& f) {
  Json values = Json::object();
  for (const auto& [a, v] : f.values()) values[std::to_string(a)] = v.to_string();
  Json j;
  j["q"] = f.period();
  j["values"] = std::move(values);
  return j;
}

PeriodicFunction periodic_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("periodic function must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "q" && key != "values") throw ValidationError("unknown key '" + key + "'");
  }
  if (!j.contains("q")) throw ValidationError("missing key 'q'");
  if (!j.contains("values")) throw ValidationError("missing key 'values'");
  const Json& q = j.at("q");
  if (!q.is_number_integer()) throw ValidationError("key 'q' must be an integer");
  const std::int64_t period = q.get<std::int64_t>();
  if (period < 1) throw ValidationError("key 'q' must be positive");
  const Json& values = j.at("values");
  if (!values.is_object()) throw ValidationError("key 'values' must be an object");
  std::map<std::int64_t, Rational> parsed;
  for (const auto& [key, v] : values.items()) {
    const std::int64_t a = parse_residue(key);
    if (a < 1 || a > period) {
      throw ValidationError("values: key '" + key + "' outside 1.." + std::to_string(period));
    }
    if (!v.is_string()) throw ValidationError("values: key '" + key + "' must map to a string");
    try {
      parsed.emplace(a, Rational::parse(v.get<std::string>()));
    } catch (const ValidationError& e) {
      throw ValidationError("values: key '" + key + "': " + e.what());
    }
  }
  return PeriodicFunction(period, std::move(parsed));
}

PeriodicFunction parse_periodic(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return periodic_from_json(j);
}

Json to_json(const Real& x, int significant) {
  Json j;
  j["value"] = x.to_string(significant);
  j["digits"] = significant > 0 ? significant : x.digits();
  return j;
}

Json to_json(const Classification& c) {
  Json trace = Json::array();
  for (const auto& t : c.trace) {
    Json e;
    e["check"] = t.check;
    e["predicate"] = t.predicate;
    e["args"] = t.args;
    e["expect"] = t.expect;
    e["holds"] = t.holds;
    trace.push_back(std::move(e));
  }
  Json j;
  j["q"] = c.q;
  j["case"] = std::string(to_string(c.kind));
  j["subcase"] = c.subcase;
  j["label"] = c.label();
  j["independent_excluding_one"] = c.independent_excluding_one;
  j["independent_including_one"] = c.independent_including_one;
  j["trace"] = std::move(trace);
  return j;
}

Json to_json(const VanishingVerdict& v) {
  Json j;
  j["kind"] = std::string(to_string(v.kind));
  j["applied_theorem"] = v.applied_theorem;
  j["statement"] = v.statement();
  j["predicts_zero"] = v.predicts_zero ? Json(*v.predicts_zero) : Json(nullptr);
  j["numeric_residual"] =
      v.numeric_residual ? to_json(*v.numeric_residual, kResidualDigits) : Json(nullptr);
  return j;
}

Json to_json(const LValue& v) {
  Json j;
  j["quantity"] = v.derivative ? "L'(s,f)" : "L(s,f)";
  j["s"] = v.s.to_string(std::min(v.s.digits(), 20));
  j["method"] = std::string(to_string(v.method));
  j["f_digest"] = v.f_digest;
  j["value"] = v.value.to_string();
  j["digits"] = v.value.digits();
  return j;
}

Json to_json(const FamilyRank& r) {
  Json j;
  j["rank"] = r.rank;
  j["independent"] = r.independent;
  j["certificate"] = r.certificate ? integers(*r.certificate) : Json(nullptr);
  return j;
}

Json to_json(const LogSineBasis& b) {
  Json entries = Json::array();
  const auto labels = b.labels();
  const auto values = b.values();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Json e;
    e["label"] = labels[i];
    e["value"] = values[i].to_string(b.digits);
    entries.push_back(std::move(e));
  }
  Json j;
  j["q"] = b.q;
  j["digits"] = b.digits;
  j["from_two"] = b.from_two;
  j["extended"] = b.extended();
  j["excluded"] = b.excluded;
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const Relation& r) {
  Json j;
  j["labels"] = r.labels;
  j["coefficients"] = integers(r.coefficients);
  j["digits"] = r.digits;
  j["residual_at_d"] = to_json(r.residual_at_d, kResidualDigits);
  j["residual_at_2d"] = to_json(r.residual_at_2d, kResidualDigits);
  j["verified_at_2d"] = r.verified_at_2d;
  return j;
}

Json to_json(const Witness& w) {
  Json j;
  j["q"] = w.f.period();
  j["p1"] = w.p1;
  j["p2"] = w.p2;
  j["half_sum"] = w.half_sum;
  j["f"] = to_json(w.f);
  j["residual"] = to_json(w.residual, kResidualDigits);
  j["digits"] = w.residual.digits();
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lderiv
