#include "capillary/cases.hpp"

#include <algorithm>
#include <cmath>

#include "capillary/bifurcation.hpp"
#include "capillary/error.hpp"
#include "capillary/stability.hpp"

namespace capillary {

namespace {

RegressionCase plane(std::string name, std::string description, SupportCurve curve, double height) {
  RegressionCase c{std::move(name), std::move(description), CaseKind::Plane, std::move(curve), 0.0, M_PI / 2.0, -1, 0.0, {}};
  c.height = height;
  return c;
}

RegressionCase cylinder(std::string name, std::string description, SupportCurve curve, int delta, double tau0) {
  RegressionCase c{std::move(name), std::move(description), CaseKind::Cylinder, std::move(curve), 0.0, M_PI / 2.0, -1, 0.0, {}};
  c.delta = delta;
  c.tau0 = tau0;
  return c;
}

RegressionCase bifurcation(std::string name, std::string description, SupportCurve curve, int delta) {
  RegressionCase c{std::move(name), std::move(description), CaseKind::Bifurcation, std::move(curve), 0.0, M_PI / 2.0, -1, 0.0, {}};
  c.delta = delta;
  c.tau_range = {1e-3, 3.0};
  return c;
}

std::vector<RegressionCase> build() {
  const auto parabola = SupportCurve::parabola();
  const auto convex = parabola.with_orientation(Orientation::FluidAbove);
  return {
      plane("ex33", "strip in a circular trough, R = 2, contact at x0 = 1", SupportCurve::circle(2.0, std::sqrt(3.0)), 0.0),
      plane("ex34", "strip on the parabola z = x^2 at height 1", parabola, 1.0),
      cylinder("p1", "concave section on the parabola, tau0 = 1", parabola, -1, 1.0),
      cylinder("p2a", "concave section on the parabola, tau0 = 1/4", parabola, -1, 0.25),
      cylinder("p2b", "concave section on the parabola, tau0 = 2", parabola, -1, 2.0),
      cylinder("p2c", "concave section on the parabola, tau0 = 4", parabola, -1, 4.0),
      cylinder("p3", "convex section on the parabola, tau0 = 2", convex, 1, 2.0),
      bifurcation("parabola-bif", "concave family on the parabola", parabola, -1),
      bifurcation("convex-bif", "convex family on the parabola", convex, 1),
      bifurcation("catenary-bif", "concave family on the catenary", SupportCurve::catenary(), -1),
  };
}

std::vector<double> lowest_nus(double M, double s0, std::size_t count) {
  int k_max = 2;
  std::vector<TransverseMode> modes;
  while ((modes = transverse_modes(M, s0, k_max)).size() < count + 1) ++k_max;
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(modes[i].nu);
  return out;
}

}  // namespace

const std::vector<RegressionCase>& regression_cases() {
  static const std::vector<RegressionCase> cases = build();
  return cases;
}

const RegressionCase& find_case(std::string_view name) {
  const auto& all = regression_cases();
  const auto it = std::find_if(all.begin(), all.end(), [&](const auto& c) { return c.name == name; });
  if (it == all.end()) throw Error(ErrorKind::InvalidInput, "unknown case '" + std::string(name) + "'");
  return *it;
}

OracleReport validate_case(const RegressionCase& c, std::vector<int> grids) {
  switch (c.kind) {
    case CaseKind::Plane: {
      if (grids.empty()) grids = {2000};
      const auto pc = plane_contact(c.curve, c.height);
      auto rep = compare_1d(pc.q, pc.s0, lowest_nus(pc.q, pc.s0, 3), grids);
      rep.label = c.name + ": transverse eigenvalues nu";
      return rep;
    }
    case CaseKind::Cylinder: {
      if (grids.empty()) grids = {2000};
      const auto cc = cylinder_contact(c.curve, c.tau0, c.gamma, c.delta);
      const double M = cc.mu / std::sin(cc.gamma);
      auto rep = compare_1d(M, cc.s0, lowest_nus(M, cc.s0, 3), grids);
      rep.label = c.name + ": transverse eigenvalues nu";
      return rep;
    }
    case CaseKind::Bifurcation: {
      if (grids.empty()) grids = {4000};
      const auto det = detect_bifurcation(c.curve, c.gamma, c.delta, c.tau_range);
      if (det.candidates.empty()) throw Error(ErrorKind::EmptyRange, "no bifurcation candidate to validate");
      const auto& b = det.candidates.front();
      const double M = b.mu / std::sin(b.gamma);
      const double nu_exact = b.kind == BifurcationCase::Supercritical ? -b.beta * b.beta : b.beta * b.beta;

      OracleReport rep;
      rep.label = c.name + ": n = 1 eigenvalue at tau0 = " + std::to_string(b.tau0) + " (absolute)";
      rep.analytic = {analytic_lambda(b, 1)};
      rep.grids = grids;
      for (const int N : grids) {
        const auto nus = fd_eigs_1d(M, b.s0, 4, N);
        const auto nearest = *std::min_element(nus.begin(), nus.end(), [&](double x, double y) {
          return std::abs(x - nu_exact) < std::abs(y - nu_exact);
        });
        const double lambda1 = (nearest - 1.0) / (b.r * b.r) + 1.0;
        rep.numeric = {lambda1};
        rep.N = N;
        rep.max_abs_err = std::abs(lambda1 - rep.analytic.front());
        rep.max_rel_err = rep.max_abs_err;
        rep.grid_errors.push_back(rep.max_abs_err);
      }
      const std::size_t k = grids.size();
      if (k >= 2 && rep.grid_errors[k - 2] > 0.0 && rep.grid_errors[k - 1] > 0.0 && grids[k - 1] != grids[k - 2]) {
        rep.convergence_order = std::log(rep.grid_errors[k - 2] / rep.grid_errors[k - 1]) /
                                std::log(static_cast<double>(grids[k - 1]) / grids[k - 2]);
      }
      rep.passed = rep.max_abs_err <= rep.tolerance;
      return rep;
    }
  }
  throw Error(ErrorKind::InvalidInput, "unknown case kind");
}

}  // namespace capillary
