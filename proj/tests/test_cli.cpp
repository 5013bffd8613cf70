#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

using holedim::cli::run;
using nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("dim reports the width certificate") {
  const auto r = call({"dim", "--k", "3", "--a", "0.32", "--b", "0.70", "--depth", "12"});
  REQUIRE(r.code == 0);
  const auto j = ordered_json::parse(r.out);
  CHECK(j["positivity"] == "positive");
  CHECK(j["certificate"] == "corollary-bound");
  CHECK(j["a"] == "8/25");
  CHECK(j["region"] == "R2");
}

TEST_CASE("dim for the middle-third hole") {
  const auto r = call({"dim", "--k", "3", "--a", "1/3", "--b", "2/3", "--depth", "12"});
  REQUIRE(r.code == 0);
  const auto j = ordered_json::parse(r.out);
  CHECK(j["lower"].get<double>() == doctest::Approx(0.63093).epsilon(1e-5));
  CHECK_FALSE(j.contains("reduced_hole"));
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"k", "a", "b", "region", "lower", "upper", "positivity", "certificate",
                                         "methods", "depth"});
}

TEST_CASE("dim output round-trips byte for byte") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"dim", "--k", "3", "--a", "0.32", "--b", "0.70", "--mode", "both", "--depth", "10"},
           {"dim", "--k", "4", "--a", "1/7", "--b", "5/7", "--depth", "8"},
           {"dim", "--k", "2", "--a", "0.29", "--b", "0.71", "--depth", "12"},
           {"dim", "--k", "5", "--a", "0", "--b", "1", "--depth", "3"}}) {
    const auto r = call(args);
    REQUIRE(r.code == 0);
    CHECK(ordered_json::parse(r.out).dump() + "\n" == r.out);
  }
}

TEST_CASE("dim rejects bad holes with exit code 2") {
  const auto r = call({"dim", "--k", "2", "--a", "0.6", "--b", "0.5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("require a < b") != std::string::npos);
  CHECK(line_count(r.err) == 1);
  CHECK(call({"dim", "--k", "2", "--a", "x", "--b", "0.5"}).code == 2);
  CHECK(call({"dim", "--k", "1", "--a", "0.1", "--b", "0.5"}).code == 2);
  CHECK(call({"dim", "--k", "3", "--a", "0.1", "--b", "0.6", "--mode", "reduced"}).code == 2);
  CHECK(call({"dim", "--k", "3", "--a", "0.1", "--b", "0.6", "--mode", "sideways"}).code == 2);
  CHECK(call({"dim", "--k", "3", "--a", "0.1", "--b", "0.6", "--depth", "30"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
}

TEST_CASE("sweep") {
  const auto r = call({"sweep", "--k", "3", "--grid", "40", "--depth", "6", "--jobs", "4"});
  REQUIRE(r.code == 0);
  CHECK(line_count(r.out) == 781);
  CHECK(r.out.rfind("k,a,b,region,lower,upper,positivity,depth\n", 0) == 0);
  CHECK(call({"sweep", "--k", "3", "--grid", "40", "--depth", "6", "--jobs", "1"}).out == r.out);

  const auto header = call({"sweep", "--k", "3", "--grid", "1"});
  CHECK(header.code == 0);
  CHECK(header.out == "k,a,b,region,lower,upper,positivity,depth\n");
}

TEST_CASE("sweep at fixed width") {
  const auto r = call({"sweep", "--k", "3", "--fix-width", "0.38", "--grid", "100", "--depth", "10"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  int r2_rows = 0;
  while (std::getline(lines, line)) {
    if (line.find(",R2,") == std::string::npos) continue;
    ++r2_rows;
    CHECK(line.find(",positive,") != std::string::npos);
  }
  CHECK(r2_rows > 0);
}

TEST_CASE("sweep at fixed left end") {
  const auto r = call({"sweep", "--k", "2", "--fix-a", "1/4", "--grid", "8", "--depth", "6"});
  REQUIRE(r.code == 0);
  CHECK(line_count(r.out) == 6);
  CHECK(call({"sweep", "--k", "2", "--fix-a", "1/4", "--fix-width", "1/2", "--grid", "8"}).code == 2);
}

TEST_CASE("cantor subcommands") {
  auto j = ordered_json::parse(call({"cantor", "eval", "--k", "3", "--x", "1/4"}).out);
  CHECK(j["fraction"] == "1/3");
  CHECK(j["decimal"] == "0.33333333333333333333");

  j = ordered_json::parse(call({"cantor", "tm-inv", "--k", "3", "--precision", "64"}).out);
  CHECK(j["decimal"].get<std::string>().rfind("0.3049", 0) == 0);

  j = ordered_json::parse(call({"cantor", "inv", "--k", "3", "--y", "0"}).out);
  CHECK(j["fraction"] == "0");

  CHECK(call({"cantor", "inv", "--k", "3", "--y", "2"}).code == 2);
  CHECK(call({"cantor", "eval", "--k", "3", "--x", "-1/2"}).code == 2);
}

TEST_CASE("check") {
  CHECK(call({"check", "--k", "3", "--a", "1/3", "--b", "2/3", "--depth", "8"}).code == 0);
  CHECK(call({"check", "--k", "2", "--a", "1/4", "--b", "3/4", "--depth", "8"}).code == 0);
  CHECK(call({"check", "--k", "4", "--a", "0.3", "--b", "0.9", "--depth", "6"}).code == 0);
  CHECK(call({"check", "--k", "3", "--a", "1/3", "--b", "2/3", "--depth", "11"}).code == 2);
}
