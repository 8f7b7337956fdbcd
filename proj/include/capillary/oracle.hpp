#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "capillary/contact.hpp"
#include "capillary/tridiagonal.hpp"

namespace capillary {

/// Symmetrized central-difference matrix of -f'' on [-s0, s0] with N
/// intervals and Robin conditions f'(s0) = M f(s0), f'(-s0) = -M f(-s0),
/// imposed through ghost points.
SymTridiagonal robin_matrix(double M, double s0, int N);

/// -f'' on (0, h) with Dirichlet ends and N intervals (N - 1 unknowns).
SymTridiagonal dirichlet_matrix(double h, int N);

/// Lowest n_eigs eigenvalues nu of the Robin problem.
std::vector<double> fd_eigs_1d(double M, double s0, int n_eigs, int N);

/// Nodal values (N + 1 nodes from -s0 to s0) of the lowest Robin mode,
/// normalized to max |f| = 1 and f > 0 at its peak.
struct GroundState {
  double nu{0.0};
  std::vector<double> f;
};
GroundState fd_ground_state_1d(double M, double s0, int N);

/// Lowest eigenvalues of the five-point discretization of the Jacobi problem
/// on [-s0, s0] x [0, h], Robin across and Dirichlet along the channel,
/// assembled as the sum of the two 1D operators.
std::vector<double> fd_eigs_2d(const PlaneContact& c, double h, int Ns, int Nt, int n_eigs);
std::vector<double> fd_eigs_2d(const CylinderContact& c, double h, int Ns, int Nt, int n_eigs);

/// u sampled on the tensor grid s_j = -s0 + 2 s0 j / ns, t_i = h i / nt.
struct SampledField {
  double s0{0.0};
  double h{0.0};
  int ns{0};
  int nt{0};
  /// Row-major by t: u[i * (ns + 1) + j].
  std::vector<double> u;

  double at(int i, int j) const { return u[static_cast<std::size_t>(i) * (ns + 1) + j]; }
  static SampledField sample(const std::function<double(double, double)>& fn, double s0, double h, int ns, int nt);
};

/// Trapezoidal value of the second variation
/// Q[u] = int (|grad u|^2 - |A|^2 u^2) - int_boundary q u^2
/// with second-order difference gradients.
double quadrature_Q(const PlaneContact& c, const SampledField& u);
double quadrature_Q(const CylinderContact& c, const SampledField& u);

struct OracleReport {
  std::string label;
  std::vector<double> analytic;
  /// At the finest grid.
  std::vector<double> numeric;
  int N{0};
  std::vector<int> grids;
  /// max |numeric - analytic| per grid.
  std::vector<double> grid_errors;
  double max_rel_err{0.0};
  double max_abs_err{0.0};
  std::optional<double> convergence_order;
  double tolerance{1e-4};
  bool passed{false};

  friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

/// Compares the lowest analytic.size() Robin eigenvalues with the FD ones on
/// each grid. Relative errors use max(|analytic|, 1e-6) as the scale; the
/// order comes from the last two grids.
OracleReport compare_1d(double M, double s0, const std::vector<double>& analytic, const std::vector<int>& grids,
                        double tolerance = 1e-4);

}  // namespace capillary
