#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "capillary/curves.hpp"

namespace capillary {

enum class RootEquation {
  /// e^{4 beta s0} = ((beta + T) / (beta - T))^2
  Exponential,
  /// tan(beta s0) = -M / beta
  TanMinus,
  /// tan(beta s0) = beta / M
  TanPlus,
};

std::string_view to_string(RootEquation eq);

struct RootRecord {
  double beta{0.0};
  RootEquation equation{RootEquation::Exponential};
  /// Index of the interval I_k = ((2k-1) pi / (2 s0), (2k+1) pi / (2 s0)),
  /// with I_0 starting at 0. For the exponential equation 0 marks the root
  /// above T and 1 the root in (0, T).
  int branch_k{0};
  /// 1-based position among the roots of the same equation, ascending.
  int ordinal{1};
  double lhs{0.0};
  double residual{0.0};
  Interval bracket;

  friend bool operator==(const RootRecord&, const RootRecord&) = default;
};

/// Left end of I_k: (2k - 1) pi / (2 s0).
double tan_asymptote(int k, double s0);

/// Smooth forms of the three equations. Each vanishes exactly at the roots
/// and has no poles for beta > 0.
double tan_minus_residual(double beta, double M, double s0);
double tan_plus_residual(double beta, double M, double s0);
double exponential_residual(double beta, double T, double s0);

/// Unique root beta > T of the exponential equation when T > 0; none when
/// T <= 0.
std::optional<RootRecord> solve_exponential(double T, double s0);

/// Root beta in (0, T) of e^{2 beta s0} (T - beta) = T + beta, which also
/// solves the squared exponential equation. It exists iff s0 T > 1 and
/// belongs to an odd (sinh) transverse mode.
std::optional<RootRecord> solve_exponential_odd(double T, double s0);

/// All roots of both tangent equations in (0, (2 k_max - 1) pi / (2 s0)),
/// sorted ascending.
std::vector<RootRecord> solve_tan_branches(double M, double s0, int k_max = 8);

/// First root of the given tangent equation (ordinal 1), if it lies below
/// the search limit of k_max intervals.
std::optional<RootRecord> first_tan_root(const std::vector<RootRecord>& roots, RootEquation eq);

}  // namespace capillary
