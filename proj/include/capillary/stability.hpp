#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "capillary/contact.hpp"
#include "capillary/roots.hpp"

namespace capillary {

enum class Classification { Unstable, StronglyStable, DegenerateCase };

std::string_view to_string(Classification c);

struct StabilityVerdict {
  Classification classification{Classification::StronglyStable};
  /// Plateau-Rayleigh critical length; set only for Unstable verdicts with a
  /// finite critical length.
  std::optional<double> h0;
  std::string reason;
  /// beta_{1,1} sits exactly at 1: stable, but a zero eigenvalue is reached
  /// in the limit of long channels.
  bool marginal{false};
  /// kappa(tau0) for strips, mu(tau0) for cylinder sections.
  double governing{0.0};
  std::vector<RootRecord> roots;

  friend bool operator==(const StabilityVerdict&, const StabilityVerdict&) = default;
};

enum class BranchKind { ExpBranch, ZeroBranch, TanMinusBranch, TanPlusBranch };

std::string_view to_string(BranchKind b);

/// One eigenvalue nu of -f'' on [-s0, s0] with f'(+-s0) = +-M f(+-s0).
struct TransverseMode {
  double nu{0.0};
  BranchKind branch{BranchKind::ExpBranch};
  /// Tangent interval index, or 0/1 for the even/odd exponential modes.
  int k{0};
  double beta{0.0};

  friend bool operator==(const TransverseMode&, const TransverseMode&) = default;
};

struct SpectrumEntry {
  double lambda{0.0};
  int n{1};
  BranchKind branch{BranchKind::ExpBranch};
  int k{0};
  double beta{0.0};

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct Spectrum {
  double h{0.0};
  /// Sorted ascending by lambda.
  std::vector<SpectrumEntry> entries;

  int negative_count() const;
  double min_lambda() const;
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Transverse eigenvalues below the asymptote m_{k_max}, ascending. An odd
/// exponential mode (beta in (0, M)) appears when s0 M > 1; the linear mode
/// nu = 0 when s0 M = 1; for M = 0 the Neumann modes (k pi / (2 s0))^2.
std::vector<TransverseMode> transverse_modes(double M, double s0, int k_max);

StabilityVerdict analyze_plane(const PlaneContact& contact);
StabilityVerdict analyze_cylinder(const CylinderContact& contact);

/// lambda = nu + n^2 pi^2 / h^2 for n = 1..n_max.
Spectrum spectrum_plane(const PlaneContact& contact, double h, int n_max, int k_max);
/// lambda = (nu - 1) / r^2 + n^2 pi^2 / h^2 for n = 1..n_max.
Spectrum spectrum_cylinder(const CylinderContact& contact, double h, int n_max, int k_max);

/// Number of negative eigenvalues on the rectangle of length h with Dirichlet
/// ends. Mode limits are chosen so that every omitted eigenvalue is positive.
int morse_index(const PlaneContact& contact, double h);
int morse_index(const CylinderContact& contact, double h);

/// Spectrum with the same automatic mode limits as morse_index.
Spectrum full_spectrum(const PlaneContact& contact, double h);
Spectrum full_spectrum(const CylinderContact& contact, double h);

}  // namespace capillary
