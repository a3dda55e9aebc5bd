#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cli.hpp"
#include "lderiv/json_io.hpp"

namespace fs = std::filesystem;
using lderiv::Json;
using lderiv::cli::run;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("lderiv_cli_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

Json report(const std::vector<std::string>& args) {
  const auto r = run(args);
  REQUIRE_MESSAGE(r.exit_code == 0, r.error);
  return Json::parse(r.report);
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  const auto r = run({"classify", "--q", "12", "--bogus"});
  CHECK(r.exit_code == 2);
  CHECK(r.error.find("Usage") != std::string::npos);
  CHECK(run({"classify"}).exit_code == 2);
  CHECK(run({"classify", "--q", "x"}).exit_code == 2);
  CHECK(run({"classify", "--q", "12", "--output", "yaml"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("validation errors exit 2") {
  CHECK(run({"classify", "--q", "1"}).exit_code == 2);
  CHECK(run({"identity", "--q", "30", "--digits", "5"}).exit_code == 2);
  CHECK(run({"witness", "--q", "105"}).exit_code == 2);
  CHECK(run({"witness", "--q", "155", "--c", "1/0"}).exit_code == 2);
  CHECK(run({"relations", "--q", "9", "--max-coeff", "0"}).exit_code == 2);
  CHECK(run({"eval", "--fn", "/nonexistent/f.json"}).exit_code == 2);
  CHECK(run({"rank", "--fns", "/nonexistent/f.json"}).exit_code == 2);
}

TEST_CASE("malformed function files name the key") {
  TempDir tmp;
  const auto bad = tmp.write("bad.json", R"({"q": 5, "values": {"9": "1"}, "oops": 1})");
  auto r = run({"eval", "--fn", bad});
  CHECK(r.exit_code == 2);
  CHECK(r.error.find("'oops'") != std::string::npos);
  const auto bad2 = tmp.write("bad2.json", R"({"q": 5, "values": {"9": "1"}})");
  r = run({"eval", "--fn", bad2});
  CHECK(r.exit_code == 2);
  CHECK(r.error.find("'9'") != std::string::npos);
}

TEST_CASE("computation errors exit 1") {
  TempDir tmp;
  const auto f = tmp.write("f.json", R"({"q": 5, "values": {"1": "1", "4": "1"}})");
  const auto r = run({"eval", "--fn", f, "--s", "1"});
  CHECK(r.exit_code == 1);
  CHECK(r.error.find("pole") != std::string::npos);
}

TEST_CASE("eval") {
  TempDir tmp;
  const auto zero = tmp.write("zero9.json", R"({"q": 9, "values": {}})");
  auto r = run({"eval", "--fn", zero, "--s", "0"});
  CHECK(r.exit_code == 0);
  CHECK(r.report.rfind("L'(0,f) = 0\n", 0) == 0);
  const auto g = tmp.write("g.json", R"({"q":5,"values":{"1":"1","2":"-1","3":"-1","4":"1"}})");
  const Json j = report({"eval", "--fn", g, "--digits", "30", "--output", "json"});
  CHECK(j["result"]["method"] == "EvenReduced0");
  CHECK(j["result"]["digits"] == 30);
  CHECK(j["result"]["value"].get<std::string>().rfind("0.48121182505960344749775891342", 0) == 0);
  const Json v = report({"eval", "--fn", g, "--s", "2", "--output", "json"});
  CHECK(v["result"]["quantity"] == "L(s,f)");
  CHECK(v["result"]["method"] == "HurwitzSum");
}

TEST_CASE("classify") {
  const Json j = report({"classify", "--q", "155", "--output", "json"});
  CHECK(j["classification"]["case"] == "Uncovered");
  CHECK(j["classification"]["trace"].size() > 3);
  CHECK(j["classification"]["trace"][0].contains("holds"));
  const auto text = run({"classify", "--q", "45"}).report;
  CHECK(text.rfind("45: PeiFeng(III,2)\n", 0) == 0);
}

TEST_CASE("identity, relations, witness, rank") {
  Json j = report({"identity", "--q", "9", "--output", "json"});
  CHECK(j["sum"]["value"].get<std::string>().rfind("1.0986122886", 0) == 0);
  CHECK(j["prime_power"] == true);

  CHECK(run({"relations", "--q", "9", "--max-coeff", "1000000", "--digits", "60"}).report ==
        "none\n");
  j = report({"relations", "--q", "55", "--max-coeff", "4", "--from-two", "--output", "json"});
  CHECK(j["relation"]["verified_at_2d"] == true);
  CHECK(j["labels"][0] == "a=2");

  j = report({"witness", "--q", "155", "--c", "0", "--digits", "100", "--output", "json"});
  const auto residual = std::stod(j["witness"]["residual"]["value"].get<std::string>());
  CHECK(residual < 1e-90);
  CHECK(j["witness"]["f"]["q"] == 155);
  CHECK(j["witness"]["f"]["values"]["2"] == "-2");

  TempDir tmp;
  const auto f1 = tmp.write("f1.json", R"({"q":9,"values":{"1":"1","8":"1"}})");
  const auto f2 = tmp.write("f2.json", R"({"q":9,"values":{"1":"2","8":"2"}})");
  const auto f3 = tmp.write("f3.json", R"({"q":9,"values":{"2":"1","7":"1"}})");
  j = report({"rank", "--fns", f1, f2, f3, "--output", "json"});
  CHECK(j["result"]["rank"] == 2);
  CHECK(j["result"]["certificate"] == Json::parse("[2,-1,0]"));
}

TEST_CASE("json reports round trip byte for byte") {
  TempDir tmp;
  const auto g = tmp.write("g.json", R"({"q":5,"values":{"1":"1","2":"-1","3":"-1","4":"1"}})");
  const std::vector<std::vector<std::string>> commands{
      {"classify", "--q", "90"},
      {"identity", "--q", "21"},
      {"eval", "--fn", g},
      {"relations", "--q", "15", "--max-coeff", "3"},
      {"witness", "--q", "55", "--c", "2/3"},
      {"rank", "--fns", g, g}};
  for (auto args : commands) {
    args.insert(args.end(), {"--output", "json"});
    const auto r = run(args);
    CAPTURE(args[0]);
    REQUIRE(r.exit_code == 0);
    CHECK(lderiv::dump(Json::parse(r.report)) == r.report);
    CHECK(run(args).report == r.report);
  }
}

TEST_CASE("digits from the environment, flags win") {
  ::setenv("LDERIV_DIGITS", "20", 1);
  Json j = report({"identity", "--q", "9", "--output", "json"});
  CHECK(j["sum"]["digits"] == 20);
  j = report({"identity", "--q", "9", "--digits", "35", "--output", "json"});
  CHECK(j["sum"]["digits"] == 35);
  ::setenv("LDERIV_DIGITS", "many", 1);
  CHECK(run({"identity", "--q", "9"}).exit_code == 2);
  ::unsetenv("LDERIV_DIGITS");
  j = report({"identity", "--q", "9", "--output", "json"});
  CHECK(j["sum"]["digits"] == 50);
}
