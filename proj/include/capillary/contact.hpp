#pragma once

#include <vector>

#include "capillary/curves.hpp"

namespace capillary {

/// A horizontal planar strip z = height meeting the support at tau = +-tau0.
struct PlaneContact {
  double height{0.0};
  double tau0{0.0};
  /// Half-width of the strip, x(tau0).
  double s0{0.0};
  double gamma{0.0};
  double kappa0{0.0};
  /// Robin coefficient kappa0 / sin(gamma).
  double q{0.0};

  friend bool operator==(const PlaneContact&, const PlaneContact&) = default;
};

/// A section of a circular cylinder whose generating circle
/// (r sin s, center_z + r cos s) meets the support at s = +-s0.
struct CylinderContact {
  double tau0{0.0};
  double s0{0.0};
  double gamma{0.0};
  /// Sign of the interface normal curvature along the conormal, +-1/r.
  int delta{-1};
  double r{0.0};
  double center_z{0.0};
  double kappa0{0.0};
  /// r kappa0 + delta cos(gamma).
  double mu{0.0};
  /// mu / (r sin(gamma)).
  double q{0.0};
  /// Mean curvature delta / (2 r).
  double H{0.0};

  friend bool operator==(const CylinderContact&, const CylinderContact&) = default;
};

/// Intersects the line z = height with the positive half of the curve.
/// The liquid lies below the plane for FluidBelow, above it otherwise; the
/// contact angle follows from the two normals.
PlaneContact plane_contact(const SupportCurve& curve, double height);

/// Circles through c(tau0) meeting the curve at angle gamma. There are up to
/// two (the radial direction is the fluid-side normal rotated by +-gamma);
/// only those whose center lies on the z-axis behind the contact point are
/// returned.
std::vector<CylinderContact> cylinder_contact_candidates(const SupportCurve& curve, double tau0, double gamma,
                                                         int delta);

/// Picks one candidate: the lower center for delta = -1, the higher for
/// delta = +1. `alternate` selects the other one when two exist.
CylinderContact cylinder_contact(const SupportCurve& curve, double tau0, double gamma, int delta,
                                 bool alternate = false);

/// n configurations at equally spaced tau over tau_range.
std::vector<CylinderContact> capillary_family(const SupportCurve& curve, double gamma, int delta, Interval tau_range,
                                              int n);

/// Checks that consecutive radii of a sampled family do not jump: every step
/// is below ten times the larger neighbouring step (plus a small floor).
bool family_is_continuous(const std::vector<CylinderContact>& family);

}  // namespace capillary
