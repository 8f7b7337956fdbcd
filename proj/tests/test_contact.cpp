#include "doctest.h"

#include <cmath>

#include "capillary/contact.hpp"
#include "capillary/error.hpp"

using namespace capillary;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("plane on the parabola at height 1") {
  const auto c = plane_contact(SupportCurve::parabola(), 1.0);
  CHECK(c.tau0 == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(c.s0 == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::sin(c.gamma) == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-12));
  CHECK(c.kappa0 == doctest::Approx(2.0 / std::pow(5.0, 1.5)).epsilon(1e-12));
  CHECK(c.q == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("plane in a circular trough") {
  for (double x0 : {0.5, 1.0, 1.5}) {
    const double R = 2.0 * x0;
    const auto c = plane_contact(SupportCurve::circle(R, std::sqrt(R * R - x0 * x0)), 0.0);
    CHECK(c.s0 == doctest::Approx(x0).epsilon(1e-12));
    CHECK(c.gamma == doctest::Approx(M_PI / 6.0).epsilon(1e-12));
    CHECK(c.q == doctest::Approx(1.0 / x0).epsilon(1e-12));
  }
}

TEST_CASE("plane contact failures") {
  CHECK(kind_of([] { plane_contact(SupportCurve::line(0.0), 1.0); }) == ErrorKind::NoIntersection);
  CHECK(kind_of([] { plane_contact(SupportCurve::parabola(), -1.0); }) == ErrorKind::NoIntersection);
  CHECK(kind_of([] { plane_contact(SupportCurve::parabola(), 0.0); }) == ErrorKind::Tangential);
  // z = x^2 - x^4/10 + x^6/1000 crosses z = 1 more than once on (0, 10).
  const auto wavy = SupportCurve::graph({0.0, 0.0, 1.0, 0.0, -0.1, 0.0, 0.001}, 10.0);
  CHECK(kind_of([&] { plane_contact(wavy, 1.0); }) == ErrorKind::MultipleIntersections);
}

TEST_CASE("cylinder section on the parabola, tau0 = 1") {
  const auto c = cylinder_contact(SupportCurve::parabola(), 1.0, M_PI / 2.0, -1);
  CHECK(c.r == doctest::Approx(std::sqrt(5.0)).epsilon(1e-13));
  CHECK(c.center_z == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(c.s0 == doctest::Approx(std::atan(0.5)).epsilon(1e-13));
  CHECK(c.s0 == doctest::Approx(0.463).epsilon(2e-3));
  CHECK(c.mu == doctest::Approx(0.4).epsilon(1e-13));
  CHECK(c.H == doctest::Approx(-1.0 / (2.0 * std::sqrt(5.0))));
}

TEST_CASE("convex section on the parabola, tau0 = 2") {
  const auto curve = SupportCurve::parabola().with_orientation(Orientation::FluidAbove);
  const auto c = cylinder_contact(curve, 2.0, M_PI / 2.0, 1);
  CHECK(c.r == doctest::Approx(2.0 * std::sqrt(17.0)).epsilon(1e-13));
  CHECK(c.mu == doctest::Approx(-4.0 / 17.0).epsilon(1e-12));
  CHECK(c.s0 == doctest::Approx(std::asin(1.0 / std::sqrt(17.0))).epsilon(1e-12));
  CHECK(c.s0 == doctest::Approx(0.244).epsilon(5e-3));
}

TEST_CASE("right-angle family radii have closed forms") {
  const auto par = capillary_family(SupportCurve::parabola(), M_PI / 2.0, -1, {0.1, 3.0}, 30);
  for (const auto& c : par) {
    const double t = c.tau0;
    CHECK(c.r == doctest::Approx(t * std::sqrt(1.0 + 4.0 * t * t)).epsilon(1e-12));
    CHECK(c.center_z == doctest::Approx(-t * t).epsilon(1e-12));
  }
  CHECK(family_is_continuous(par));

  const auto cat = capillary_family(SupportCurve::catenary(), M_PI / 2.0, -1, {0.1, 3.0}, 30);
  for (const auto& c : cat) {
    const double t = c.tau0;
    CHECK(c.r == doctest::Approx(t * std::cosh(t)).epsilon(1e-12));
    CHECK(c.center_z == doctest::Approx(std::cosh(t) - t * std::sinh(t)).epsilon(1e-12));
  }
  CHECK(family_is_continuous(cat));
}

TEST_CASE("catenary section at tau0 = 0.954") {
  const auto c = cylinder_contact(SupportCurve::catenary(), 0.954, M_PI / 2.0, -1);
  CHECK(c.center_z == doctest::Approx(0.435).epsilon(3e-3));
  CHECK(c.r == doctest::Approx(1.423).epsilon(3e-3));
}

TEST_CASE("unit radius crossings") {
  // Parabola: t^2 (1 + 4 t^2) = 1.
  const double tp = std::sqrt((std::sqrt(17.0) - 1.0) / 8.0);
  CHECK(cylinder_contact(SupportCurve::parabola(), tp, M_PI / 2.0, -1).r == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(tp == doctest::Approx(0.6248).epsilon(1e-4));
}

TEST_CASE("right angle on a horizontal line") {
  const auto c = cylinder_contact(SupportCurve::line(0.0), 1.0, M_PI / 2.0, -1);
  CHECK(c.r == doctest::Approx(1.0));
  CHECK(c.center_z == doctest::Approx(0.0));
  CHECK(c.s0 == doctest::Approx(M_PI / 2.0));
}

TEST_CASE("family continuity detects jumps") {
  auto fam = capillary_family(SupportCurve::parabola(), M_PI / 2.0, -1, {0.5, 1.0}, 20);
  CHECK(family_is_continuous(fam));
  for (std::size_t i = 10; i < fam.size(); ++i) fam[i].r += 5.0;
  CHECK_FALSE(family_is_continuous(fam));
}

TEST_CASE("cylinder contact failures") {
  const auto p = SupportCurve::parabola();
  CHECK(kind_of([&] { cylinder_contact(p, 1.0, M_PI / 2.0, 0); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { cylinder_contact(p, 1.0, 0.0, -1); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { cylinder_contact(p, -1.0, M_PI / 2.0, -1); }) == ErrorKind::InvalidInput);
  // Nearly tangent contact: both radial directions point away from the axis.
  CHECK(kind_of([&] { cylinder_contact(p, 1.0, 0.1, -1); }) == ErrorKind::NegativeRadius);
  CHECK(kind_of([&] { cylinder_contact(p, 1.0, M_PI / 2.0, -1, true); }) == ErrorKind::InvalidInput);
}
