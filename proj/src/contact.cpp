#include "capillary/contact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "capillary/error.hpp"

namespace capillary {

namespace {

constexpr int kContactScan = 4096;

double bisect_height(const SupportCurve& curve, double height, double lo, double hi) {
  double flo = curve.jet(lo).c.z - height;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = curve.jet(mid).c.z - height;
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

PlaneContact plane_contact(const SupportCurve& curve, double height) {
  const double reach = curve.domain().hi;
  if (!(reach > 0.0)) throw Error(ErrorKind::InvalidInput, "curve domain has no positive half");

  std::vector<double> roots;
  std::vector<std::pair<double, double>> brackets;
  double prev_tau = reach / kContactScan;
  double prev = curve.jet(prev_tau).c.z - height;
  if (prev == 0.0) roots.push_back(prev_tau);
  for (int i = 2; i <= kContactScan; ++i) {
    const double tau = reach * i / kContactScan;
    const double f = curve.jet(tau).c.z - height;
    if (f == 0.0) {
      roots.push_back(tau);
    } else if (prev != 0.0 && (f < 0.0) != (prev < 0.0)) {
      brackets.emplace_back(prev_tau, tau);
    }
    prev = f;
    prev_tau = tau;
  }
  // Sign change between the vertex and the first scan point.
  const double f0 = curve.jet(0.0).c.z - height;
  const double f1 = curve.jet(reach / kContactScan).c.z - height;
  if (f0 != 0.0 && f1 != 0.0 && (f0 < 0.0) != (f1 < 0.0)) brackets.emplace_back(0.0, reach / kContactScan);

  const std::size_t count = roots.size() + brackets.size();
  if (count == 0) {
    if (std::abs(f0) <= 1e-12 * (1.0 + std::abs(height))) {
      throw Error(ErrorKind::Tangential, "plane touches the curve only at its vertex");
    }
    throw Error(ErrorKind::NoIntersection, "plane z = " + std::to_string(height) + " misses the curve");
  }
  if (count > 1) {
    throw Error(ErrorKind::MultipleIntersections,
                std::to_string(count) + " crossings of z = " + std::to_string(height) + " on the positive half");
  }

  const double tau0 = roots.empty() ? bisect_height(curve, height, brackets[0].first, brackets[0].second) : roots[0];
  const CurvePoint p = curve.eval(tau0);
  const Vec2 left = curve.orientation() == Orientation::FluidBelow ? p.normal : -p.normal;

  PlaneContact c;
  c.height = height;
  c.tau0 = tau0;
  c.s0 = p.position.x;
  const double sin_g = std::abs(left.x);
  if (sin_g <= 1e-12) throw Error(ErrorKind::Tangential, "plane is tangent to the curve at the contact");
  if (!(c.s0 > 0.0)) throw Error(ErrorKind::NoIntersection, "contact point is not on the positive side");
  c.gamma = std::atan2(sin_g, left.z);
  c.kappa0 = p.kappa;
  c.q = p.kappa / sin_g;
  return c;
}

std::vector<CylinderContact> cylinder_contact_candidates(const SupportCurve& curve, double tau0, double gamma,
                                                         int delta) {
  if (delta != 1 && delta != -1) throw Error(ErrorKind::InvalidInput, "delta must be +1 or -1");
  if (!(gamma > 0.0 && gamma < M_PI)) throw Error(ErrorKind::InvalidInput, "contact angle must lie in (0, pi)");
  if (!(tau0 > 0.0)) throw Error(ErrorKind::InvalidInput, "tau0 must be positive");

  const CurvePoint p = curve.eval(tau0);
  const double cg = std::cos(gamma);
  const double sg = std::sin(gamma);

  std::vector<CylinderContact> out;
  int parallel = 0;
  for (const double side : {1.0, -1.0}) {
    const Vec2 v = cg * p.normal + (side * sg) * p.tangent;
    if (std::abs(v.x) <= 1e-14) {
      ++parallel;
      continue;
    }
    const double t = -p.position.x / v.x;
    const double r = -t;
    if (!(r > 0.0)) continue;

    CylinderContact c;
    c.tau0 = tau0;
    c.gamma = gamma;
    c.delta = delta;
    c.r = r;
    c.center_z = p.position.z + t * v.z;
    c.s0 = std::atan2(p.position.x, p.position.z - c.center_z);
    c.kappa0 = p.kappa;
    c.mu = r * p.kappa + delta * cg;
    c.q = c.mu / (r * sg);
    c.H = delta / (2.0 * r);
    out.push_back(c);
  }
  if (out.empty()) {
    if (parallel == 2) throw Error(ErrorKind::ParallelAxis, "radial line is parallel to the symmetry axis");
    throw Error(ErrorKind::NegativeRadius, "radial line meets the axis on the wrong side of the contact point");
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.center_z < b.center_z; });
  return out;
}

CylinderContact cylinder_contact(const SupportCurve& curve, double tau0, double gamma, int delta, bool alternate) {
  auto cands = cylinder_contact_candidates(curve, tau0, gamma, delta);
  if (cands.size() == 1) {
    if (alternate) throw Error(ErrorKind::InvalidInput, "only one admissible circle at this contact");
    return cands.front();
  }
  const bool lower = (delta == -1) != alternate;
  return lower ? cands.front() : cands.back();
}

std::vector<CylinderContact> capillary_family(const SupportCurve& curve, double gamma, int delta, Interval tau_range,
                                              int n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "family needs at least 2 samples");
  if (tau_range.hi < tau_range.lo) throw Error(ErrorKind::InvalidInput, "empty tau range");
  std::vector<CylinderContact> family;
  family.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double tau = tau_range.lo + tau_range.width() * i / (n - 1);
    family.push_back(cylinder_contact(curve, tau, gamma, delta));
  }
  return family;
}

bool family_is_continuous(const std::vector<CylinderContact>& family) {
  const std::size_t n = family.size();
  if (n < 3) return true;
  std::vector<double> step(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) step[i] = std::abs(family[i + 1].r - family[i].r);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double neighbour = 0.0;
    if (i > 0) neighbour = std::max(neighbour, step[i - 1]);
    if (i + 2 < n) neighbour = std::max(neighbour, step[i + 1]);
    if (step[i] > 10.0 * neighbour + 1e-12 * (1.0 + family[i].r)) return false;
  }
  return true;
}

}  // namespace capillary
