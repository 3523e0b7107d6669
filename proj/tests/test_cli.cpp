#include "doctest.h"

#include "golden_corpus.hpp"
#include "hosoya/scalar.hpp"
#include "json.hpp"
#include "oracles.hpp"

#include <regex>
#include <set>

namespace {

const std::string kGolden = HOSOYA_GOLDEN_DIR;

// Every string in a JSON document that looks like an integer must parse
// and print back unchanged.
void check_round_trip(const nlohmann::json& j, std::size_t& count) {
  static const std::regex integer("-?[0-9]+");
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (std::regex_match(s, integer)) {
      const auto parsed = hosoya::parse_decimal(s);
      REQUIRE(parsed.has_value());
      CHECK(hosoya::to_decimal(*parsed) == s);
      ++count;
    }
  } else if (j.is_structured()) {
    for (const auto& child : j) check_round_trip(child, count);
  }
}

}  // namespace

TEST_CASE("golden corpus covers every subcommand and format") {
  const auto cases = golden::load_corpus(kGolden);
  std::set<std::string> commands;
  std::set<std::string> formats;
  for (const auto& c : cases) {
    if (c.args.empty()) continue;
    commands.insert(c.args[0]);
    for (std::size_t i = 0; i + 1 < c.args.size(); ++i) {
      if (c.args[i] == "--format") formats.insert(c.args[0] + ":" + c.args[i + 1]);
    }
  }
  CHECK(commands == std::set<std::string>{"eigen", "graph", "matrix", "triangle", "verify"});
  for (const char* f : {"triangle:json", "triangle:csv", "matrix:json", "matrix:csv",
                        "eigen:json", "verify:json", "graph:json", "graph:dot"}) {
    CHECK(formats.count(f) == 1);
  }
}

TEST_CASE("golden outputs match byte for byte") {
  for (const auto& c : golden::load_corpus(kGolden)) {
    CAPTURE(c.name);
    const auto r = golden::run(c.args);
    CHECK(r.exit_code == c.exit_code);
    CHECK(r.out == golden::expected_output(kGolden, c));
    if (c.exit_code == hosoya::cli::kExitUsage) {
      CHECK(r.out.empty());
      CHECK_FALSE(r.err.empty());
    } else {
      CHECK(r.err.empty());
    }
  }
}

TEST_CASE("repeated runs are identical") {
  for (const auto& c : golden::load_corpus(kGolden)) {
    CAPTURE(c.name);
    const auto a = golden::run(c.args);
    const auto b = golden::run(c.args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}

TEST_CASE("JSON numbers are exact decimal strings") {
  std::size_t count = 0;
  for (const auto& c : golden::load_corpus(kGolden)) {
    if (c.exit_code != 0) continue;
    const auto r = golden::run(c.args);
    if (r.out.empty() || (r.out[0] != '{' && r.out[0] != '[')) continue;
    CAPTURE(c.name);
    check_round_trip(nlohmann::json::parse(r.out), count);
  }
  CHECK(count > 100);

  const auto r = golden::run({"matrix", "backslash", "150", "200", "2", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["entries"][0][0].get<std::string>() ==
        hosoya::to_decimal(oracle::fib(150) * oracle::fib(200)));
  CHECK(j["entries"][1][1].get<std::string>() ==
        hosoya::to_decimal(oracle::fib(151) * oracle::fib(199)));
}

TEST_CASE("spot values through the command line") {
  auto r = golden::run({"matrix", "backslash", "3", "7", "5", "--format", "csv"});
  CHECK(r.out.substr(0, r.out.find(',')) == "26");
  r = golden::run({"matrix", "antidiagonal", "2", "--format", "csv"});
  CHECK(r.out == "0,1\n1,0\n");
  r = golden::run({"triangle", "3", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out) ==
        nlohmann::json::parse(R"([["1"],["1","1"],["2","1","2"]])"));
  r = golden::run({"eigen", "persymmetric", "4", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)[0]["value"] == "10");
}

TEST_CASE("exit code contract") {
  CHECK(golden::run({"verify", "trace", "--max-n", "12"}).exit_code == hosoya::cli::kExitOk);
  CHECK(golden::run({"verify", "nosuch"}).exit_code == hosoya::cli::kExitUsage);
  CHECK(golden::run({"graph", "7", "--check"}).exit_code == hosoya::cli::kExitUsage);
  CHECK(golden::run({"verify", "trace", "--max-n", "-1"}).exit_code == hosoya::cli::kExitUsage);
  CHECK(golden::run({"--help"}).exit_code == hosoya::cli::kExitOk);
  const auto scope = golden::run({"graph", "7", "--check"});
  CHECK(scope.err.find("3k+2") != std::string::npos);
}
