#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "lderiv/classify.hpp"
#include "lderiv/errors.hpp"
#include "lderiv/json_io.hpp"
#include "lderiv/lseries.hpp"
#include "lderiv/relations.hpp"

namespace lderiv::cli {

namespace {

constexpr int kDefaultDigits = 50;
constexpr const char* kDigitsEnv = "LDERIV_DIGITS";

struct Options {
  std::optional<int> digits;
  std::int64_t max_coeff = 100;
  std::string output = "text";
  std::string fn;
  std::vector<std::string> fns;
  std::string s = "0";
  std::int64_t q = 0;
  std::string c = "0";
  bool from_two = false;
  bool extended = false;
};

int resolve_digits(const Options& o) {
  int d = kDefaultDigits;
  if (o.digits) {
    d = *o.digits;
  } else if (const char* env = std::getenv(kDigitsEnv); env && *env) {
    std::string text(env);
    if (!std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        text.size() > 6) {
      throw ValidationError(std::string(kDigitsEnv) + " is not a digit count: '" + text + "'");
    }
    d = std::stoi(text);
  }
  check_digits(d);
  return d;
}

PeriodicFunction read_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_periodic(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string join_terms(const std::vector<std::string>& labels,
                       const std::vector<mpz_class>& coefficients) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (coefficients[i] == 0) continue;
    const bool negative = coefficients[i] < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += mpz_class(abs(coefficients[i])).get_str() + "*[" + labels[i] + "]";
  }
  return out;
}

struct Report {
  Json json;
  std::string text;
};

Report do_eval(const Options& o, int d) {
  const PeriodicFunction f = read_function(o.fn);
  const Real s = Real::parse(o.s, d);
  const LValue v = evaluate(s, f, d);
  Json j;
  j["command"] = "eval";
  j["q"] = f.period();
  j["result"] = to_json(v);
  std::string text = (v.derivative ? "L'(0,f) = " : "L(" + o.s + ",f) = ") + v.value.to_string() +
                     "\nmethod " + std::string(to_string(v.method)) + ", " + std::to_string(d) +
                     " digits\n";
  return {std::move(j), std::move(text)};
}

Report do_classify(const Options& o) {
  const Classification c = classify_modulus(o.q);
  Json j;
  j["command"] = "classify";
  j["classification"] = to_json(c);
  std::string text = std::to_string(c.q) + ": " + c.label() + "\n";
  for (const auto& t : c.trace) {
    text += "  " + t.check + "  " + t.predicate + "(";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      text += (i ? ", " : "") + std::to_string(t.args[i]);
    }
    text += ")";
    if (!t.expect.empty()) text += " == " + t.expect;
    text += t.holds ? "  yes\n" : "  no\n";
  }
  return {std::move(j), std::move(text)};
}

Report do_identity(const Options& o, int d) {
  const Real r = sine_identity_residual(o.q, d);
  Json j;
  j["command"] = "identity";
  j["q"] = o.q;
  j["prime_power"] = is_prime_power(o.q);
  j["sum"] = to_json(r);
  std::string text = "sum log(2 sin(k pi/" + std::to_string(o.q) + ")) = " + r.to_string() + "\n";
  return {std::move(j), std::move(text)};
}

Report do_relations(const Options& o, int d) {
  if (o.max_coeff < 1) throw ValidationError("--max-coeff must be at least 1");
  const LogSineBasis basis = log_sine_basis(o.q, d, LogSineOptions{o.extended, o.from_two});
  const auto rel = find_integer_relation(basis, o.max_coeff, d);
  Json j;
  j["command"] = "relations";
  j["q"] = o.q;
  j["digits"] = d;
  j["max_coeff"] = o.max_coeff;
  j["labels"] = basis.labels();
  j["excluded"] = basis.excluded;
  j["relation"] = rel ? to_json(*rel) : Json(nullptr);
  std::string text;
  if (!rel) {
    text = "none\n";
  } else {
    text = join_terms(rel->labels, rel->coefficients) + " = 0\n" + "residual " +
           rel->residual_at_d.to_string(6) + " at " + std::to_string(d) + " digits, " +
           rel->residual_at_2d.to_string(6) + " at " + std::to_string(2 * d) + "\n";
  }
  return {std::move(j), std::move(text)};
}

Report do_witness(const Options& o, int d) {
  const Witness w = build_witness(o.q, Rational::parse(o.c), d);
  Json j;
  j["command"] = "witness";
  j["witness"] = to_json(w);
  std::string text = "q = " + std::to_string(o.q) + ", p1 = " + std::to_string(w.p1) +
                     ", p2 = " + std::to_string(w.p2) + ", half-sum " +
                     std::to_string(w.half_sum) + "\n|L'(0,f)| = " + w.residual.to_string(6) +
                     " at " + std::to_string(d) + " digits\nf = " + to_json(w.f).dump() + "\n";
  return {std::move(j), std::move(text)};
}

Report do_rank(const Options& o) {
  std::vector<PeriodicFunction> fs;
  for (const auto& path : o.fns) fs.push_back(read_function(path));
  const FamilyRank r = family_rank(fs);
  Json j;
  j["command"] = "rank";
  j["functions"] = fs.size();
  j["result"] = to_json(r);
  std::string text = "rank " + std::to_string(r.rank) + " of " + std::to_string(fs.size()) +
                     (r.independent ? ", independent\n" : ", dependent\n");
  if (r.certificate) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < fs.size(); ++i) labels.push_back("f" + std::to_string(i + 1));
    text += join_terms(labels, *r.certificate) + " = 0\n";
  }
  return {std::move(j), std::move(text)};
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Derivatives of L-series of periodic functions at s = 0", "lderiv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--digits", o.digits, "working precision in decimal digits (default 50, env " +
                                           std::string(kDigitsEnv) + ")");
  app.add_option("--max-coeff", o.max_coeff, "coefficient bound for relation search")
      ->capture_default_str();
  app.add_option("--output", o.output, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* eval = app.add_subcommand("eval", "L'(0,f) when s = 0, otherwise L(s,f)");
  eval->add_option("--fn", o.fn, "periodic function JSON file")->required();
  eval->add_option("--s", o.s, "evaluation point")->capture_default_str();

  auto* classify = app.add_subcommand("classify", "classify a modulus");
  classify->add_option("--q", o.q)->required();

  auto* identity = app.add_subcommand("identity", "sum of log 2 sin(k pi/q) over units");
  identity->add_option("--q", o.q)->required();

  auto* relations = app.add_subcommand("relations", "integer relation among log 2 sin(a pi/q)");
  relations->add_option("--q", o.q)->required();
  relations->add_flag("--from-two", o.from_two, "start the basis at a = 2");
  relations->add_flag("--extended", o.extended, "append pi and log 2 to the basis");

  auto* witness = app.add_subcommand("witness", "non-constant f with L'(0,f) = 0");
  witness->add_option("--q", o.q)->required();
  witness->add_option("--c", o.c, "value at a = 1")->capture_default_str();

  auto* rank = app.add_subcommand("rank", "rank of a family of functions");
  rank->add_option("--fns", o.fns, "periodic function JSON files")->required()->expected(1, -1);

  RunResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.report = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.error = std::string(e.what()) + "\n\n" + app.help();
    return result;
  }

  try {
    const int d = resolve_digits(o);
    Report r;
    if (*eval) {
      r = do_eval(o, d);
    } else if (*classify) {
      r = do_classify(o);
    } else if (*identity) {
      r = do_identity(o, d);
    } else if (*relations) {
      r = do_relations(o, d);
    } else if (*witness) {
      r = do_witness(o, d);
    } else {
      r = do_rank(o);
    }
    result.report = o.output == "json" ? dump(r.json) : r.text;
  } catch (const ValidationError& e) {
    result.exit_code = 2;
    result.error = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.error = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace lderiv::cli
