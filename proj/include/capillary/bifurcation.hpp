#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "capillary/contact.hpp"
#include "capillary/curves.hpp"

namespace capillary {

enum class BifurcationCase {
  /// r < 1, beta = sqrt(1 - r^2), trigonometric f1.
  Subcritical,
  /// r = 1, constant or linear f1.
  Unit,
  /// r > 1, beta = sqrt(r^2 - 1), f1 = cosh(beta s).
  Supercritical,
};

enum class EigenForm { Cos, Sin, Const, Linear, Cosh };

std::string_view to_string(BifurcationCase c);
std::string_view to_string(EigenForm f);

struct BifurcationResult {
  BifurcationCase kind{BifurcationCase::Supercritical};
  double tau0{0.0};
  double s0{0.0};
  double r{0.0};
  double beta{0.0};
  double center_z{0.0};
  double mu{0.0};
  double gamma{0.0};
  int delta{-1};
  /// |beta - 1| > 1e-6; always true in the Unit case.
  bool transversal{false};
  /// Distinct candidates found across all three cases in the scanned range.
  int multiplicity{1};
  EigenForm form{EigenForm::Cosh};
  /// Period of the n = 1 mode along the rulings; mode n has period 2 pi / n.
  double period{2.0 * M_PI};

  friend bool operator==(const BifurcationResult&, const BifurcationResult&) = default;
};

/// Values at a crossing r(tau0) = 1 and whether s0 = sin(gamma) / mu holds.
struct UnitCheck {
  double tau0{0.0};
  double s0{0.0};
  double r{1.0};
  double mu{0.0};
  /// sin(gamma) / mu; absent when mu = 0.
  std::optional<double> sin_over_mu;
  bool matched{false};

  friend bool operator==(const UnitCheck&, const UnitCheck&) = default;
};

struct DetectionReport {
  std::vector<BifurcationResult> candidates;
  std::vector<UnitCheck> unit_checks;
  bool certified{false};
  std::string explanation;

  friend bool operator==(const DetectionReport&, const DetectionReport&) = default;
};

/// Default scan range (1e-3 hi, hi) over the positive half of the domain.
Interval default_tau_range(const SupportCurve& curve);

/// Roots in tau of either tangent alternative with beta = sqrt(1 - r^2),
/// over the part of tau_range where r < 1. Throws EmptyRange when there is
/// no such part.
std::vector<BifurcationResult> scan_subcritical(const SupportCurve& curve, double gamma, int delta,
                                                Interval tau_range);

/// Every crossing r = 1 in tau_range with its s0 versus sin(gamma) / mu check.
std::vector<UnitCheck> unit_checks(const SupportCurve& curve, double gamma, int delta, Interval tau_range);

/// First crossing r = 1 that satisfies mu = 0 or s0 = sin(gamma) / mu within
/// 1e-6 relative.
std::optional<BifurcationResult> scan_unit(const SupportCurve& curve, double gamma, int delta, Interval tau_range);
std::optional<BifurcationResult> scan_unit(const SupportCurve& curve, double gamma, int delta);

/// Roots in tau of the exponential relation with beta = sqrt(r^2 - 1) and
/// beta > mu / sin(gamma), over the part of tau_range where r > 1. Throws
/// EmptyRange when there is no such part.
std::vector<BifurcationResult> scan_supercritical(const SupportCurve& curve, double gamma, int delta,
                                                  Interval tau_range);

/// Union of the three scans. Certified iff exactly one candidate exists and
/// it is transversal.
DetectionReport detect_bifurcation(const SupportCurve& curve, double gamma, int delta, Interval tau_range);

/// Analytic eigenvalue of mode n at the candidate: n^2 + (beta^2 - 1)/r^2,
/// n^2 - 1/r^2 or n^2 - (1 + beta^2)/r^2.
double analytic_lambda(const BifurcationResult& b, int n);

/// f1(s) for the candidate's eigenfunction form.
double eigenfunction(const BifurcationResult& b, double s);

/// Row of the residual curves: v1 is the product of the two tangent
/// residuals (r < 1), v3 the exponential residual (r > 1); NaN elsewhere.
struct ResidualSample {
  double tau{0.0};
  double residual_v1{0.0};
  double residual_v3{0.0};
};
std::vector<ResidualSample> residual_curves(const SupportCurve& curve, double gamma, int delta, Interval tau_range,
                                            int n);

}  // namespace capillary
