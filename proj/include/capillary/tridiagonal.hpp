#pragma once

#include <cstddef>
#include <vector>

namespace capillary {

/// Real symmetric tridiagonal matrix: `diag` has n entries, `off` n - 1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }
};

/// Number of eigenvalues strictly below x (Sturm sequence count, evaluated
/// in extended precision).
int sturm_count(const SymTridiagonal& t, long double x);

/// Gershgorin bounds enclosing the spectrum.
void gershgorin(const SymTridiagonal& t, double& lo, double& hi);

/// The `count` smallest eigenvalues in ascending order, by bisection.
std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, int count);

/// Unit eigenvector for an eigenvalue computed by `lowest_eigenvalues`,
/// by inverse iteration.
std::vector<double> eigenvector(const SymTridiagonal& t, double eigenvalue);

}  // namespace capillary
