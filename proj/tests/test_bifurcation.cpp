#include "doctest.h"

#include <cmath>

#include "capillary/bifurcation.hpp"
#include "capillary/error.hpp"

using namespace capillary;

namespace {

constexpr double kRight = M_PI / 2.0;

void check_robin(const BifurcationResult& b) {
  const double M = b.mu / std::sin(b.gamma);
  const double e = 1e-6;
  for (const double side : {1.0, -1.0}) {
    const double s = side * b.s0;
    const double df = (eigenfunction(b, s + e) - eigenfunction(b, s - e)) / (2.0 * e);
    CHECK(df == doctest::Approx(side * M * eigenfunction(b, s)).epsilon(1e-6));
  }
  const double a = eigenfunction(b, b.s0), c = eigenfunction(b, -b.s0);
  CHECK(a * a == doctest::Approx(c * c).epsilon(1e-14));
}

}  // namespace

TEST_CASE("concave parabola: one supercritical point") {
  const auto rep = detect_bifurcation(SupportCurve::parabola(), kRight, -1, {1e-3, 3.0});
  REQUIRE(rep.certified);
  REQUIRE(rep.candidates.size() == 1);
  const auto& b = rep.candidates.front();
  CHECK(b.kind == BifurcationCase::Supercritical);
  CHECK(b.form == EigenForm::Cosh);
  CHECK(b.transversal);
  CHECK(b.multiplicity == 1);
  CHECK(b.tau0 == doctest::Approx(0.754).epsilon(0.002 / 0.754));
  CHECK(b.s0 == doctest::Approx(0.585).epsilon(0.002 / 0.585));
  CHECK(b.r == doctest::Approx(1.364).epsilon(0.003 / 1.364));
  CHECK(b.beta == doctest::Approx(0.928).epsilon(0.003 / 0.928));
  CHECK(b.beta == doctest::Approx(std::sqrt(b.r * b.r - 1.0)).epsilon(1e-10));
  CHECK(std::abs(analytic_lambda(b, 1)) < 1e-8);
  CHECK(analytic_lambda(b, 0) < 0.0);
  CHECK(analytic_lambda(b, 2) > 0.0);
  check_robin(b);

  CHECK(scan_subcritical(SupportCurve::parabola(), kRight, -1, {1e-3, 3.0}).empty());
  CHECK_FALSE(scan_unit(SupportCurve::parabola(), kRight, -1, {1e-3, 3.0}));
}

TEST_CASE("concave parabola: unit radius check values") {
  const auto checks = unit_checks(SupportCurve::parabola(), kRight, -1, {1e-3, 3.0});
  REQUIRE(checks.size() == 1);
  const auto& u = checks.front();
  CHECK(u.tau0 == doctest::Approx(std::sqrt((std::sqrt(17.0) - 1.0) / 8.0)).epsilon(1e-9));
  CHECK(u.s0 == doctest::Approx(0.674).epsilon(0.002 / 0.674));
  REQUIRE(u.sin_over_mu);
  CHECK(*u.sin_over_mu == doctest::Approx(2.049).epsilon(0.005 / 2.049));
  CHECK_FALSE(u.matched);
}

TEST_CASE("catenary: one supercritical point") {
  const auto rep = detect_bifurcation(SupportCurve::catenary(), kRight, -1, {1e-3, 3.0});
  REQUIRE(rep.certified);
  const auto& b = rep.candidates.front();
  CHECK(b.kind == BifurcationCase::Supercritical);
  CHECK(b.tau0 == doctest::Approx(0.954).epsilon(0.002 / 0.954));
  CHECK(b.beta == doctest::Approx(1.013).epsilon(0.003 / 1.013));
  CHECK(b.r == doctest::Approx(1.423).epsilon(0.003 / 1.423));
  CHECK(b.center_z == doctest::Approx(0.435).epsilon(0.003 / 0.435));
  CHECK(b.center_z == doctest::Approx(std::cosh(b.tau0) - b.tau0 * std::sinh(b.tau0)).epsilon(1e-12));
  CHECK(std::abs(analytic_lambda(b, 1)) < 1e-8);
  check_robin(b);

  const auto checks = unit_checks(SupportCurve::catenary(), kRight, -1, {1e-3, 3.0});
  REQUIRE(checks.size() == 1);
  CHECK(checks[0].s0 == doctest::Approx(0.871).epsilon(0.002 / 0.871));
  CHECK(*checks[0].sin_over_mu == doctest::Approx(1.707).epsilon(0.005 / 1.707));
}

TEST_CASE("convex parabola has a subcritical zero eigenvalue") {
  const auto convex = SupportCurve::parabola().with_orientation(Orientation::FluidAbove);
  const auto sub = scan_subcritical(convex, kRight, 1, {1e-3, 3.0});
  REQUIRE(sub.size() == 1);
  const auto& b = sub.front();
  CHECK(b.tau0 == doctest::Approx(0.4834093).epsilon(1e-6));
  CHECK(b.r < 1.0);
  CHECK(b.beta == doctest::Approx(std::sqrt(1.0 - b.r * b.r)).epsilon(1e-10));
  CHECK(std::abs(analytic_lambda(b, 1)) < 1e-8);
  check_robin(b);
}

TEST_CASE("synthetic support with a linear unit mode") {
  // z = a x^2 + b x^4 with r = 1 and s0 = 1 / mu at x = 0.6 (right angle):
  // phi'(0.6) = 4/3 and phi''(0.6) (0.6)^3 = 1 / asin(0.6).
  const double x = 0.6;
  const double d1 = 4.0 / 3.0;
  const double d2 = 1.0 / (std::asin(x) * x * x * x);
  // 2 a x + 4 b x^3 = d1, 2 a + 12 b x^2 = d2.
  const double b4 = (d2 - d1 / x) / (12.0 * x * x - 4.0 * x * x);
  const double a2 = (d1 - 4.0 * b4 * x * x * x) / (2.0 * x);
  const auto curve = SupportCurve::graph({0.0, 0.0, a2, 0.0, b4}, 3.0);

  const auto u = scan_unit(curve, kRight, -1, {0.3, 0.9});
  REQUIRE(u);
  CHECK(u->kind == BifurcationCase::Unit);
  CHECK(u->form == EigenForm::Linear);
  CHECK(u->tau0 == doctest::Approx(x).epsilon(1e-8));
  CHECK(u->r == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(u->transversal);
  CHECK(std::abs(analytic_lambda(*u, 1)) < 1e-8);
  CHECK(analytic_lambda(*u, 0) < 0.0);
  check_robin(*u);
}

TEST_CASE("regime errors") {
  const auto p = SupportCurve::parabola();
  CHECK_THROWS_WITH_AS(scan_supercritical(p, kRight, -1, {0.01, 0.5}), doctest::Contains("EmptyRange"), Error);
  CHECK_THROWS_WITH_AS(scan_subcritical(p, kRight, -1, {1.0, 2.0}), doctest::Contains("EmptyRange"), Error);
  CHECK_THROWS_AS(detect_bifurcation(p, kRight, -1, {0.7, 0.7}), Error);
  CHECK_THROWS_AS(detect_bifurcation(p, kRight, -1, {0.5, 50.0}), Error);

  const auto rep = detect_bifurcation(p, kRight, -1, {0.01, 0.5});
  CHECK(rep.candidates.empty());
  CHECK_FALSE(rep.certified);
  CHECK_FALSE(rep.explanation.empty());
}

TEST_CASE("default range and residual curves") {
  const auto p = SupportCurve::parabola();
  const auto range = default_tau_range(p);
  CHECK(range.hi == p.domain().hi);
  CHECK(range.lo == doctest::Approx(1e-3 * range.hi));

  const auto rows = residual_curves(p, kRight, -1, {0.1, 2.0}, 100);
  REQUIRE(rows.size() == 100);
  int sign_changes = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const double r = row.tau * std::sqrt(1.0 + 4.0 * row.tau * row.tau);
    if (r < 1.0) {
      CHECK(std::isfinite(row.residual_v1));
      CHECK(std::isnan(row.residual_v3));
    } else if (r > 1.0) {
      CHECK(std::isnan(row.residual_v1));
      CHECK(std::isfinite(row.residual_v3));
      if (i > 0 && std::isfinite(rows[i - 1].residual_v3) &&
          (rows[i - 1].residual_v3 < 0.0) != (row.residual_v3 < 0.0)) {
        ++sign_changes;
      }
    }
  }
  CHECK(sign_changes == 1);
}

TEST_CASE("names") {
  CHECK(to_string(BifurcationCase::Supercritical) == "Supercritical");
  CHECK(to_string(EigenForm::Linear) == "linear");
}
