#include "capillary/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "capillary/error.hpp"

namespace capillary {

namespace {

constexpr double kMuZero = 1e-12;
constexpr double kLinearTol = 1e-9;

void require_length(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw Error(ErrorKind::InvalidInput, "channel length h must be positive");
}

std::vector<SpectrumEntry> expand(const std::vector<TransverseMode>& modes, double h, int n_max, double scale,
                                  double offset) {
  if (n_max < 1) throw Error(ErrorKind::InvalidInput, "n_max must be at least 1");
  std::vector<SpectrumEntry> out;
  out.reserve(modes.size() * static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const double axial = n * n * M_PI * M_PI / (h * h);
    for (const auto& m : modes) out.push_back({scale * (m.nu - offset) + axial, n, m.branch, m.k, m.beta});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
  return out;
}

int tan_limit(double s0) {
  // Smallest k_max whose search limit m_{k_max} clears beta = 1, plus one.
  int k = 1;
  while (tan_asymptote(k, s0) <= 1.0) ++k;
  return k + 1;
}

int axial_limit(double h, double threshold) {
  int n = 1;
  while (n * n * M_PI * M_PI / (h * h) <= threshold) ++n;
  return n + 2;
}

}  // namespace

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Unstable: return "Unstable";
    case Classification::StronglyStable: return "StronglyStable";
    case Classification::DegenerateCase: return "DegenerateCase";
  }
  return "Unknown";
}

std::string_view to_string(BranchKind b) {
  switch (b) {
    case BranchKind::ExpBranch: return "ExpBranch";
    case BranchKind::ZeroBranch: return "ZeroBranch";
    case BranchKind::TanMinusBranch: return "TanMinusBranch";
    case BranchKind::TanPlusBranch: return "TanPlusBranch";
  }
  return "Unknown";
}

int Spectrum::negative_count() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.lambda < 0.0; }));
}

double Spectrum::min_lambda() const {
  return entries.empty() ? std::numeric_limits<double>::quiet_NaN() : entries.front().lambda;
}

std::vector<TransverseMode> transverse_modes(double M, double s0, int k_max) {
  if (!(s0 > 0.0)) throw Error(ErrorKind::NonPositiveHalfWidth, "half-width s0 must be positive");
  std::vector<TransverseMode> modes;

  if (std::abs(M) <= kMuZero) {
    modes.push_back({0.0, BranchKind::ZeroBranch, 0, 0.0});
    for (int k = 1; k < k_max; ++k) {
      const double odd = tan_asymptote(k, s0);
      const double even = k * M_PI / s0;
      modes.push_back({odd * odd, BranchKind::TanPlusBranch, k, odd});
      if (even < tan_asymptote(k_max, s0)) modes.push_back({even * even, BranchKind::TanMinusBranch, k, even});
    }
    std::sort(modes.begin(), modes.end(), [](const auto& a, const auto& b) { return a.nu < b.nu; });
    return modes;
  }

  const double sM = s0 * M;
  const bool linear = std::abs(sM - 1.0) <= kLinearTol;
  if (auto even = solve_exponential(M, s0)) modes.push_back({-even->beta * even->beta, BranchKind::ExpBranch, 0, even->beta});
  if (!linear) {
    if (auto odd = solve_exponential_odd(M, s0)) modes.push_back({-odd->beta * odd->beta, BranchKind::ExpBranch, 1, odd->beta});
  } else {
    modes.push_back({0.0, BranchKind::ZeroBranch, 0, 0.0});
  }
  for (const auto& r : solve_tan_branches(M, s0, k_max)) {
    const bool plus = r.equation == RootEquation::TanPlus;
    if (linear && plus && r.branch_k == 0) continue;
    modes.push_back({r.beta * r.beta, plus ? BranchKind::TanPlusBranch : BranchKind::TanMinusBranch, r.branch_k, r.beta});
  }
  std::sort(modes.begin(), modes.end(), [](const auto& a, const auto& b) { return a.nu < b.nu; });
  return modes;
}

StabilityVerdict analyze_plane(const PlaneContact& contact) {
  StabilityVerdict v;
  v.governing = contact.kappa0;
  if (contact.kappa0 > 0.0) {
    const auto root = solve_exponential(contact.q, contact.s0);
    v.classification = Classification::Unstable;
    v.h0 = 2.0 * M_PI / root->beta;
    v.reason = "kappa > 0: exponential mode gives lambda_n = n^2 pi^2 / h^2 - beta^2";
    v.roots.push_back(*root);
  } else {
    v.classification = Classification::StronglyStable;
    v.reason = "kappa <= 0: every eigenvalue is positive";
  }
  return v;
}

StabilityVerdict analyze_cylinder(const CylinderContact& c) {
  StabilityVerdict v;
  v.governing = c.mu;
  const double sg = std::sin(c.gamma);
  const double M = c.mu / sg;

  if (std::abs(c.mu) <= kMuZero) {
    v.classification = Classification::Unstable;
    v.reason = "mu = 0: constant mode gives lambda_n = -1/r^2 + n^2 pi^2 / h^2; no critical length formula";
    return v;
  }
  if (std::abs(sg - c.s0 * c.mu) <= kLinearTol * sg) {
    v.classification = Classification::DegenerateCase;
    v.reason = "sin(gamma) = s0 mu: linear mode f(s) = B s solves the boundary problem";
    return v;
  }
  if (c.mu > 0.0) {
    const auto root = solve_exponential(M, c.s0);
    v.classification = Classification::Unstable;
    v.h0 = 2.0 * M_PI * c.r / std::sqrt(1.0 + root->beta * root->beta);
    v.reason = "mu > 0: exponential mode gives lambda_n = n^2 pi^2 / h^2 - (1 + beta^2) / r^2";
    v.roots.push_back(*root);
    return v;
  }

  const auto roots = solve_tan_branches(M, c.s0, 1);
  const auto b11 = first_tan_root(roots, RootEquation::TanMinus);
  if (!b11) throw Error(ErrorKind::InvalidInput, "no tangent root in the first interval for mu < 0");
  v.roots.push_back(*b11);
  const double b = b11->beta;
  if (b < 1.0 && std::abs(b - 1.0) > 1e-12) {
    v.classification = Classification::Unstable;
    v.h0 = 2.0 * M_PI * c.r / std::sqrt(1.0 - b * b);
    v.reason = "mu < 0 and beta_{1,1} < 1";
  } else {
    v.classification = Classification::StronglyStable;
    v.marginal = std::abs(b - 1.0) <= 1e-12;
    v.reason = v.marginal ? "mu < 0 and beta_{1,1} = 1: zero eigenvalue only in the limit" : "mu < 0 and beta_{1,1} > 1";
  }
  return v;
}

Spectrum spectrum_plane(const PlaneContact& c, double h, int n_max, int k_max) {
  require_length(h);
  const auto modes = transverse_modes(c.q, c.s0, k_max);
  return {h, expand(modes, h, n_max, 1.0, 0.0)};
}

Spectrum spectrum_cylinder(const CylinderContact& c, double h, int n_max, int k_max) {
  require_length(h);
  const auto modes = transverse_modes(c.mu / std::sin(c.gamma), c.s0, k_max);
  return {h, expand(modes, h, n_max, 1.0 / (c.r * c.r), 1.0)};
}

Spectrum full_spectrum(const PlaneContact& c, double h) {
  require_length(h);
  const int k_max = tan_limit(c.s0);
  const auto modes = transverse_modes(c.q, c.s0, k_max);
  const double deepest = modes.empty() ? 0.0 : -modes.front().nu;
  return {h, expand(modes, h, axial_limit(h, std::max(deepest, 0.0)), 1.0, 0.0)};
}

Spectrum full_spectrum(const CylinderContact& c, double h) {
  require_length(h);
  const int k_max = tan_limit(c.s0);
  const auto modes = transverse_modes(c.mu / std::sin(c.gamma), c.s0, k_max);
  const double deepest = modes.empty() ? 0.0 : (1.0 - modes.front().nu) / (c.r * c.r);
  return {h, expand(modes, h, axial_limit(h, std::max(deepest, 0.0)), 1.0 / (c.r * c.r), 1.0)};
}

int morse_index(const PlaneContact& c, double h) { return full_spectrum(c, h).negative_count(); }

int morse_index(const CylinderContact& c, double h) { return full_spectrum(c, h).negative_count(); }

}  // namespace capillary
