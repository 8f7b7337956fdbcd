#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "capillary/cli.hpp"
#include "capillary/error.hpp"
#include "json.hpp"

using namespace capillary;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "capillary");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  const auto o = invoke(std::move(args));
  REQUIRE(o.code == 0);
  return json::parse(o.out);
}

std::size_t count_lines(const std::string& path) {
  std::ifstream f(path);
  std::size_t n = 0;
  for (std::string line; std::getline(f, line);) ++n;
  return n;
}

}  // namespace

TEST_CASE("plane command") {
  auto j = invoke_json({"plane", "--support", "parabola", "--height", "1", "--gamma", "auto"});
  CHECK(j.at("h0").get<double>() == doctest::Approx(13.58).epsilon(0.05 / 13.58));
  CHECK(j.at("verdict").at("classification") == "Unstable");

  j = invoke_json({"plane", "--support", "circle:r=2,x0=1", "--height", "0"});
  CHECK(j.at("h0").get<double>() == doctest::Approx(5.23739).epsilon(1e-5));
  CHECK(j.at("contact").at("gamma").get<double>() == doctest::Approx(M_PI / 6.0));

  j = invoke_json({"plane", "--support", "parabola", "--height", "1", "--h", "20"});
  CHECK(j.at("morse_index") == 2);
}

TEST_CASE("cylinder command") {
  auto j = invoke_json({"cylinder", "--support", "parabola", "--tau0", "1", "--gamma", "90", "--delta", "-1"});
  CHECK(j.at("h0").get<double>() == doctest::Approx(10.142).epsilon(0.02 / 10.142));
  j = invoke_json({"cylinder", "--support", "parabola", "--tau0", "2", "--gamma", "90", "--branch", "convex"});
  CHECK(j.at("h0").get<double>() == doctest::Approx(215.687).epsilon(1.0 / 215.687));
  j = invoke_json({"cylinder", "--support", "parabola", "--tau0", "4", "--gamma", "90", "--delta", "-1"});
  CHECK(j.at("h0").get<double>() == doctest::Approx(143.466).epsilon(0.005));
}

TEST_CASE("bifurcate command") {
  auto j = invoke_json({"bifurcate", "--support", "catenary", "--gamma", "90", "--tau", "0.1:3"});
  CHECK(j.at("status") == "Certified");
  CHECK(j.at("result").at("tau0").get<double>() == doctest::Approx(0.954).epsilon(0.002 / 0.954));

  j = invoke_json({"bifurcate", "--support", "parabola", "--tau", "0.1:0.5"});
  CHECK(j.at("status") == "NoBifurcation");
  CHECK(j.at("result").is_null());
}

TEST_CASE("spectrum, validate and family commands") {
  auto j = invoke_json({"spectrum", "--support", "parabola", "--height", "1", "--h", "20"});
  CHECK(j.at("morse_index") == 2);

  j = invoke_json({"validate", "--case", "p1"});
  CHECK(j.at("report").at("passed") == true);

  j = invoke_json({"family", "--support", "parabola", "--tau", "0.1:2", "--n", "20"});
  CHECK(j.at("continuous") == true);
  CHECK(j.at("members").size() == 20);

  const auto csv = invoke({"spectrum", "--support", "parabola", "--height", "1", "--h", "20", "--output", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("branch,k,n,beta,lambda\r\n", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"plane", "--support", "line:c=0", "--height", "1"}).code == cli::kNoContact);
  CHECK(invoke({"bifurcate", "--support", "parabola", "--tau", "0.7:0.7"}).code == cli::kNoContact);
  CHECK(invoke({"plane", "--support", "nonsense", "--height", "1"}).code == cli::kInvalidInput);
  CHECK(invoke({"plane", "--height", "1", "--bogus"}).code == cli::kInvalidInput);
  CHECK(invoke({"cylinder", "--support", "parabola", "--tau0", "1", "--gamma", "120"}).code == cli::kOk);
  CHECK(invoke({"plane", "--support", "parabola", "--height", "1", "--gamma", "10"}).code == cli::kInvalidInput);
  CHECK(invoke({"--help"}).code == cli::kOk);

  const auto bad = invoke({"plane", "--support", "line:c=0", "--height", "1"});
  const auto j = json::parse(bad.out);
  CHECK(j.at("error").at("kind") == "NoIntersection");
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"bifurcate", "--support", "parabola", "--tau", "0.001:3"};
  CHECK(invoke(args).out == invoke(args).out);
}

TEST_CASE("config file fills missing options") {
  const char* path = "cli_test.conf";
  {
    std::ofstream f(path);
    f << "# strip on the parabola\nsupport=parabola\n\nheight=1\nh=20\n";
  }
  auto j = invoke_json({"plane", "--config", path});
  CHECK(j.at("h0").get<double>() == doctest::Approx(13.58).epsilon(0.05 / 13.58));
  CHECK(j.at("morse_index") == 2);

  // Command-line values win over the file.
  j = invoke_json({"plane", "--config", path, "--h", "10"});
  CHECK(j.at("morse_index") == 1);
  std::remove(path);

  CHECK(invoke({"plane", "--config", "missing.conf"}).code == cli::kInvalidInput);
}

TEST_CASE("plot files") {
  const char* path = "cli_test_plot.csv";
  CHECK(invoke({"plane", "--support", "parabola", "--height", "1", "--emit-plot", path}).code == 0);
  CHECK(count_lines(path) == 201);
  {
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    CHECK(header == "h,lambda_min,index\r");
  }
  CHECK(invoke({"bifurcate", "--support", "catenary", "--emit-plot", path}).code == 0);
  CHECK(count_lines(path) == 501);
  std::remove(path);
}

TEST_CASE("support and range parsing") {
  CHECK(cli::parse_support("parabola:a=2").eval(1.0).kappa == doctest::Approx(4.0 / std::pow(17.0, 1.5)));
  CHECK(cli::parse_support("circle:r=2,zc=1").eval(0.0).position.z == doctest::Approx(-1.0));
  CHECK(cli::parse_support("graph:c0=1,c2=1").eval(0.0).position.z == doctest::Approx(1.0));
  CHECK(cli::parse_support("catenary:domain=2").domain().hi == 2.0);
  CHECK_THROWS_AS(cli::parse_support("circle:r=2"), Error);
  CHECK_THROWS_AS(cli::parse_support("parabola:b=1"), Error);

  CHECK(cli::parse_range("0.1:3") == Interval{0.1, 3.0});
  CHECK_THROWS_WITH_AS(cli::parse_range("3:1"), doctest::Contains("EmptyRange"), Error);
  CHECK_THROWS_WITH_AS(cli::parse_range("1:1"), doctest::Contains("EmptyRange"), Error);
  CHECK(cli::parse_range("1:1", true) == Interval{1.0, 1.0});
  CHECK_THROWS_AS(cli::parse_range("abc"), Error);
}
