#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "capillary/contact.hpp"
#include "capillary/curves.hpp"
#include "capillary/oracle.hpp"

namespace capillary {

enum class CaseKind { Plane, Cylinder, Bifurcation };

/// A named reference configuration.
struct RegressionCase {
  std::string name;
  std::string description;
  CaseKind kind{CaseKind::Plane};
  SupportCurve curve;
  /// Plane cases.
  double height{0.0};
  /// Cylinder and bifurcation cases.
  double gamma{M_PI / 2.0};
  int delta{-1};
  double tau0{0.0};
  Interval tau_range;
};

const std::vector<RegressionCase>& regression_cases();

/// Throws InvalidInput for an unknown name.
const RegressionCase& find_case(std::string_view name);

/// FD check of the case. Plane and cylinder cases compare the three lowest
/// transverse eigenvalues; bifurcation cases compare the n = 1 eigenvalue at
/// the certified point against 0 (absolute error). Default grid: 2000 for
/// strips and cylinders, 4000 at bifurcation points.
OracleReport validate_case(const RegressionCase& c, std::vector<int> grids);

}  // namespace capillary
