#include "doctest.h"

#include <cmath>
#include <sstream>

#include "capillary/error.hpp"
#include "capillary/report.hpp"

using namespace capillary;

namespace {

template <class T>
T round_trip(const T& v) {
  const json j = v;
  return json::parse(j.dump()).get<T>();
}

}  // namespace

TEST_CASE("contacts round-trip") {
  const auto pc = plane_contact(SupportCurve::parabola(), 1.0);
  CHECK(round_trip(pc) == pc);
  const auto cc = cylinder_contact(SupportCurve::parabola(), 1.0, M_PI / 2.0, -1);
  CHECK(round_trip(cc) == cc);
  CHECK(round_trip(Interval{0.25, 3.5}) == Interval{0.25, 3.5});
}

TEST_CASE("verdicts and spectra round-trip") {
  const auto cc = cylinder_contact(SupportCurve::parabola(), 1.0, M_PI / 2.0, -1);
  const auto v = analyze_cylinder(cc);
  CHECK(round_trip(v) == v);
  const json j = v;
  CHECK(j.at("classification") == "Unstable");
  CHECK(j.at("h0").get<double>() == *v.h0);

  StabilityVerdict stable;
  stable.reason = "kappa <= 0";
  const json js = stable;
  CHECK(js.at("h0").is_null());
  CHECK(round_trip(stable) == stable);

  const auto s = full_spectrum(cc, 12.0);
  CHECK(round_trip(s) == s);
  CHECK(round_trip(v.roots.front()) == v.roots.front());
}

TEST_CASE("bifurcation reports round-trip") {
  const auto rep = detect_bifurcation(SupportCurve::catenary(), M_PI / 2.0, -1, {1e-3, 3.0});
  CHECK(round_trip(rep) == rep);
  const json j = rep.candidates.front();
  CHECK(j.at("case") == "Supercritical");
  CHECK(j.at("eigenfunction").at("form") == "cosh");
  CHECK(j.at("eigenfunction").at("beta").get<double>() == rep.candidates.front().beta);

  UnitCheck u;
  u.tau0 = 0.5;
  CHECK(json(u).at("sin_over_mu").is_null());
  CHECK(round_trip(u) == u);
}

TEST_CASE("oracle report round-trips") {
  OracleReport r;
  r.label = "demo";
  r.analytic = {-0.2, 1.5};
  r.numeric = {-0.2000001, 1.5000002};
  r.N = 2000;
  r.grids = {1000, 2000};
  r.grid_errors = {4e-7, 1e-7};
  r.max_rel_err = 1.3e-7;
  r.max_abs_err = 2e-7;
  r.convergence_order = 2.0;
  r.passed = true;
  CHECK(round_trip(r) == r);
  r.convergence_order.reset();
  CHECK(round_trip(r) == r);
}

TEST_CASE("numbers survive text") {
  for (double v : {0.1, -1.0 / 3.0, 1e-300, 143.46557012345, 0.0}) CHECK(std::stod(format_number(v)) == v);
  CHECK(format_number(std::nan("")) == "nan");
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");

  std::ostringstream out;
  CsvWriter w(out, {"x", "y"});
  w.row({"1", "a,b"});
  CHECK(out.str() == "x,y\r\n1,\"a,b\"\r\n");
  CHECK_THROWS_AS(w.row({"1"}), Error);
}

TEST_CASE("spectrum csv") {
  const auto pc = plane_contact(SupportCurve::parabola(), 1.0);
  const auto s = spectrum_plane(pc, 20.0, 2, 2);
  std::ostringstream out;
  write_spectrum_csv(out, s);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "branch,k,n,beta,lambda\r");
  std::getline(in, line);
  CHECK(line.rfind("ExpBranch,0,1,", 0) == 0);
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows + 1 == s.entries.size());
}
