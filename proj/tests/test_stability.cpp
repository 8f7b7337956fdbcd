#include "doctest.h"

#include <cmath>

#include "capillary/error.hpp"
#include "capillary/stability.hpp"

using namespace capillary;

namespace {

CylinderContact synthetic(double r, double s0, double mu, double gamma = M_PI / 2.0) {
  CylinderContact c;
  c.tau0 = 1.0;
  c.s0 = s0;
  c.gamma = gamma;
  c.r = r;
  c.mu = mu;
  c.q = mu / (r * std::sin(gamma));
  return c;
}

const SupportCurve& convex_parabola() {
  static const auto c = SupportCurve::parabola().with_orientation(Orientation::FluidAbove);
  return c;
}

}  // namespace

TEST_CASE("strip in a circular trough") {
  const auto c = plane_contact(SupportCurve::circle(2.0, std::sqrt(3.0)), 0.0);
  const auto v = analyze_plane(c);
  CHECK(v.classification == Classification::Unstable);
  REQUIRE(v.h0);
  CHECK(*v.h0 == doctest::Approx(5.23739).epsilon(1e-5));
  REQUIRE(v.roots.size() == 1);
  CHECK(v.roots[0].beta == doctest::Approx(1.19967864).epsilon(1e-8));
}

TEST_CASE("strip on the parabola") {
  const auto c = plane_contact(SupportCurve::parabola(), 1.0);
  const auto v = analyze_plane(c);
  CHECK(v.classification == Classification::Unstable);
  REQUIRE(v.h0);
  CHECK(*v.h0 == doctest::Approx(13.58).epsilon(0.05 / 13.58));
  CHECK(v.governing == doctest::Approx(c.kappa0));

  const auto s = full_spectrum(c, 20.0);
  CHECK(s.negative_count() == 2);
  for (const auto& e : s.entries) CHECK((e.lambda < 0.0) == (e.n <= 2 && e.branch == BranchKind::ExpBranch));
  CHECK(s.min_lambda() == doctest::Approx(-0.462 * 0.462 + M_PI * M_PI / 400.0).epsilon(1e-2));
}

TEST_CASE("strip on a convex support is strongly stable") {
  const auto c = plane_contact(convex_parabola(), 1.0);
  const auto v = analyze_plane(c);
  CHECK(v.classification == Classification::StronglyStable);
  CHECK_FALSE(v.h0);
  CHECK(morse_index(c, 1000.0) == 0);
}

TEST_CASE("concave section, tau0 = 1") {
  const auto c = cylinder_contact(SupportCurve::parabola(), 1.0, M_PI / 2.0, -1);
  const auto v = analyze_cylinder(c);
  CHECK(v.classification == Classification::Unstable);
  REQUIRE(v.h0);
  CHECK(*v.h0 == doctest::Approx(10.142).epsilon(0.02 / 10.142));
  CHECK(v.roots.at(0).beta == doctest::Approx(0.958).epsilon(0.002 / 0.958));
  CHECK(morse_index(c, *v.h0 * 0.999) == 1);
  CHECK(morse_index(c, *v.h0 * 1.001) == 2);
}

TEST_CASE("concave sections at other contact points") {
  const std::pair<double, double> table[] = {{0.25, 1.473}, {2.0, 36.829}, {4.0, 143.466}};
  for (const auto& [tau0, h0] : table) {
    const auto v = analyze_cylinder(cylinder_contact(SupportCurve::parabola(), tau0, M_PI / 2.0, -1));
    REQUIRE(v.h0);
    CHECK(*v.h0 == doctest::Approx(h0).epsilon(0.005));
  }
}

TEST_CASE("convex section, tau0 = 2") {
  const auto c = cylinder_contact(convex_parabola(), 2.0, M_PI / 2.0, 1);
  const auto v = analyze_cylinder(c);
  CHECK(v.classification == Classification::Unstable);
  REQUIRE(v.h0);
  CHECK(*v.h0 == doctest::Approx(215.687).epsilon(1.0 / 215.687));
  CHECK(v.roots.at(0).beta == doctest::Approx(0.970).epsilon(0.002 / 0.970));
  CHECK(v.governing < 0.0);

  // lambda_n = (beta^2 - 1) / r^2 + n^2 pi^2 / h^2 stays positive at h = 100
  // and has a single negative entry at h = 150.
  CHECK(morse_index(c, 100.0) == 0);
  CHECK(full_spectrum(c, 100.0).min_lambda() > 0.0);
  const auto s = full_spectrum(c, 150.0);
  CHECK(s.negative_count() == 1);
  CHECK(s.entries.front().n == 1);
  CHECK(s.entries.front().branch == BranchKind::TanMinusBranch);
}

TEST_CASE("zero mu") {
  const auto c = synthetic(1.0, 1.0, 0.0);
  const auto v = analyze_cylinder(c);
  CHECK(v.classification == Classification::Unstable);
  CHECK_FALSE(v.h0);
  CHECK_FALSE(v.reason.empty());

  const auto s = spectrum_cylinder(c, M_PI, 3, 3);
  CHECK(s.entries.front().branch == BranchKind::ZeroBranch);
  CHECK(s.entries.front().n == 1);
  CHECK(std::abs(s.entries.front().lambda) < 1e-14);
}

TEST_CASE("linear degenerate case") {
  const auto c = synthetic(2.0, 0.5, 2.0);
  const auto v = analyze_cylinder(c);
  CHECK(v.classification == Classification::DegenerateCase);
  CHECK_FALSE(v.h0);
  const auto modes = transverse_modes(2.0, 0.5, 3);
  const auto zero = std::find_if(modes.begin(), modes.end(), [](const auto& m) { return m.branch == BranchKind::ZeroBranch; });
  REQUIRE(zero != modes.end());
  CHECK(zero->nu == 0.0);
}

TEST_CASE("marginal first tangent root") {
  // beta_{1,1} = 1 exactly when M = -tan(s0).
  const double s0 = 0.7;
  const auto c = synthetic(3.0, s0, -std::tan(s0));
  const auto v = analyze_cylinder(c);
  CHECK(v.classification == Classification::StronglyStable);
  CHECK(v.marginal);
}

TEST_CASE("transverse modes") {
  SUBCASE("Neumann") {
    const auto m = transverse_modes(0.0, M_PI / 2.0, 4);
    REQUIRE(m.size() >= 4);
    for (int k = 0; k < 4; ++k) CHECK(m[k].nu == doctest::Approx(k * k).epsilon(1e-12));
  }
  SUBCASE("odd exponential mode") {
    const auto m = transverse_modes(1.5, 1.0, 3);
    REQUIRE(m.size() >= 2);
    CHECK(m[0].branch == BranchKind::ExpBranch);
    CHECK(m[0].k == 0);
    CHECK(m[1].branch == BranchKind::ExpBranch);
    CHECK(m[1].k == 1);
    CHECK(m[1].nu == doctest::Approx(-1.65853).epsilon(1e-4));
  }
  SUBCASE("sorted") {
    const auto m = transverse_modes(-0.8, 1.2, 6);
    for (std::size_t i = 1; i < m.size(); ++i) CHECK(m[i - 1].nu <= m[i].nu);
  }
}

TEST_CASE("morse index is nondecreasing in h") {
  const auto pc = plane_contact(SupportCurve::parabola(), 1.0);
  const auto cc = cylinder_contact(SupportCurve::parabola(), 1.0, M_PI / 2.0, -1);
  int prev_p = 0, prev_c = 0;
  for (int i = 1; i <= 60; ++i) {
    const double h = 0.5 * i;
    const int ip = morse_index(pc, h), ic = morse_index(cc, h);
    CHECK(ip >= prev_p);
    CHECK(ic >= prev_c);
    prev_p = ip;
    prev_c = ic;
  }
  CHECK(prev_p > 1);
}

TEST_CASE("spectrum formulas") {
  const auto cc = cylinder_contact(SupportCurve::parabola(), 1.0, M_PI / 2.0, -1);
  const auto s = spectrum_cylinder(cc, 7.0, 3, 2);
  const auto modes = transverse_modes(cc.mu, cc.s0, 2);
  for (const auto& e : s.entries) {
    const auto m = std::find_if(modes.begin(), modes.end(), [&](const auto& t) { return t.beta == e.beta; });
    REQUIRE(m != modes.end());
    CHECK(e.lambda == doctest::Approx((m->nu - 1.0) / 5.0 + e.n * e.n * M_PI * M_PI / 49.0).epsilon(1e-13));
  }
  CHECK_THROWS_AS(spectrum_cylinder(cc, 0.0, 3, 2), Error);
  CHECK_THROWS_AS(spectrum_cylinder(cc, 1.0, 0, 2), Error);
}
