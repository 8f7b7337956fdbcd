#include "capillary/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "capillary/error.hpp"

namespace capillary {

namespace {

void check_1d(int n_eigs, int N) {
  if (N < 50) throw Error(ErrorKind::GridTooCoarse, "1D grid needs at least 50 intervals");
  if (n_eigs < 1 || n_eigs > N / 4) throw Error(ErrorKind::GridTooCoarse, "n_eigs must lie in [1, N/4]");
}

void check_2d(int Ns, int Nt) {
  if (Ns < 30 || Nt < 30) throw Error(ErrorKind::GridTooCoarse, "2D grids need at least 30 intervals each");
}

std::vector<double> dirichlet_modes(double h, int N) {
  std::vector<double> out(static_cast<std::size_t>(N - 1));
  const double H = h / N;
  for (int n = 1; n < N; ++n) {
    const double s = std::sin(n * M_PI / (2.0 * N));
    out[static_cast<std::size_t>(n - 1)] = 4.0 * s * s / (H * H);
  }
  return out;
}

// Smallest n_eigs sums a_i + b_j of two ascending lists.
std::vector<double> smallest_sums(const std::vector<double>& a, const std::vector<double>& b, int n_eigs) {
  std::vector<double> all;
  const std::size_t na = std::min(a.size(), static_cast<std::size_t>(n_eigs));
  const std::size_t nb = std::min(b.size(), static_cast<std::size_t>(n_eigs));
  all.reserve(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) all.push_back(a[i] + b[j]);
  }
  std::sort(all.begin(), all.end());
  all.resize(std::min(all.size(), static_cast<std::size_t>(n_eigs)));
  return all;
}

// Second-order differences along one axis (central inside, one-sided ends).
double diff(const std::function<double(int)>& f, int i, int n, double H) {
  if (i == 0) return (-3.0 * f(0) + 4.0 * f(1) - f(2)) / (2.0 * H);
  if (i == n) return (3.0 * f(n) - 4.0 * f(n - 1) + f(n - 2)) / (2.0 * H);
  return (f(i + 1) - f(i - 1)) / (2.0 * H);
}

double trapezoid_weight(int i, int n) { return (i == 0 || i == n) ? 0.5 : 1.0; }

struct Metric {
  double area;
  double s_scale;
  double curvature2;
  double q;
};

double integrate_Q(const SampledField& u, const Metric& m) {
  if (u.ns < 2 || u.nt < 2) throw Error(ErrorKind::GridTooCoarse, "quadrature needs at least 2 intervals per side");
  if (u.u.size() != static_cast<std::size_t>(u.ns + 1) * (u.nt + 1)) {
    throw Error(ErrorKind::InvalidInput, "sampled field has the wrong number of values");
  }
  const double Hs = 2.0 * u.s0 / u.ns;
  const double Ht = u.h / u.nt;
  double bulk = 0.0;
  for (int i = 0; i <= u.nt; ++i) {
    for (int j = 0; j <= u.ns; ++j) {
      const double us = diff([&](int jj) { return u.at(i, jj); }, j, u.ns, Hs);
      const double ut = diff([&](int ii) { return u.at(ii, j); }, i, u.nt, Ht);
      const double v = u.at(i, j);
      const double density = m.s_scale * us * us + ut * ut - m.curvature2 * v * v;
      bulk += trapezoid_weight(i, u.nt) * trapezoid_weight(j, u.ns) * density;
    }
  }
  bulk *= m.area * Hs * Ht;
  double edge = 0.0;
  for (int i = 0; i <= u.nt; ++i) {
    const double a = u.at(i, 0);
    const double b = u.at(i, u.ns);
    edge += trapezoid_weight(i, u.nt) * (a * a + b * b);
  }
  edge *= Ht;
  return bulk - m.q * edge;
}

}  // namespace

SymTridiagonal robin_matrix(double M, double s0, int N) {
  if (!(s0 > 0.0)) throw Error(ErrorKind::NonPositiveHalfWidth, "half-width s0 must be positive");
  if (N < 2) throw Error(ErrorKind::GridTooCoarse, "grid needs at least 2 intervals");
  const double H = 2.0 * s0 / N;
  const double inv = 1.0 / (H * H);
  SymTridiagonal t;
  t.diag.assign(static_cast<std::size_t>(N + 1), 2.0 * inv);
  t.off.assign(static_cast<std::size_t>(N), -inv);
  t.diag.front() = t.diag.back() = 2.0 * (1.0 - H * M) * inv;
  t.off.front() = t.off.back() = -std::sqrt(2.0) * inv;
  return t;
}

SymTridiagonal dirichlet_matrix(double h, int N) {
  if (!(h > 0.0)) throw Error(ErrorKind::InvalidInput, "channel length h must be positive");
  if (N < 2) throw Error(ErrorKind::GridTooCoarse, "grid needs at least 2 intervals");
  const double H = h / N;
  const double inv = 1.0 / (H * H);
  SymTridiagonal t;
  t.diag.assign(static_cast<std::size_t>(N - 1), 2.0 * inv);
  t.off.assign(static_cast<std::size_t>(N - 2), -inv);
  return t;
}

std::vector<double> fd_eigs_1d(double M, double s0, int n_eigs, int N) {
  check_1d(n_eigs, N);
  return lowest_eigenvalues(robin_matrix(M, s0, N), n_eigs);
}

GroundState fd_ground_state_1d(double M, double s0, int N) {
  check_1d(1, N);
  const SymTridiagonal t = robin_matrix(M, s0, N);
  GroundState g;
  g.nu = lowest_eigenvalues(t, 1).front();
  g.f = eigenvector(t, g.nu);
  // Undo the symmetrizing scaling of the end rows.
  g.f.front() *= std::sqrt(2.0);
  g.f.back() *= std::sqrt(2.0);
  const double peak = *std::max_element(g.f.begin(), g.f.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
  for (auto& v : g.f) v /= peak;
  return g;
}

std::vector<double> fd_eigs_2d(const PlaneContact& c, double h, int Ns, int Nt, int n_eigs) {
  check_2d(Ns, Nt);
  if (n_eigs < 1) throw Error(ErrorKind::InvalidInput, "n_eigs must be positive");
  const auto across = lowest_eigenvalues(robin_matrix(c.q, c.s0, Ns), std::min(n_eigs, Ns + 1));
  return smallest_sums(across, dirichlet_modes(h, Nt), n_eigs);
}

std::vector<double> fd_eigs_2d(const CylinderContact& c, double h, int Ns, int Nt, int n_eigs) {
  check_2d(Ns, Nt);
  if (n_eigs < 1) throw Error(ErrorKind::InvalidInput, "n_eigs must be positive");
  auto across = lowest_eigenvalues(robin_matrix(c.mu / std::sin(c.gamma), c.s0, Ns), std::min(n_eigs, Ns + 1));
  for (auto& nu : across) nu = (nu - 1.0) / (c.r * c.r);
  return smallest_sums(across, dirichlet_modes(h, Nt), n_eigs);
}

SampledField SampledField::sample(const std::function<double(double, double)>& fn, double s0, double h, int ns,
                                  int nt) {
  SampledField f{s0, h, ns, nt, {}};
  f.u.resize(static_cast<std::size_t>(ns + 1) * (nt + 1));
  for (int i = 0; i <= nt; ++i) {
    const double t = h * i / nt;
    for (int j = 0; j <= ns; ++j) f.u[static_cast<std::size_t>(i) * (ns + 1) + j] = fn(-s0 + 2.0 * s0 * j / ns, t);
  }
  return f;
}

double quadrature_Q(const PlaneContact& c, const SampledField& u) { return integrate_Q(u, {1.0, 1.0, 0.0, c.q}); }

double quadrature_Q(const CylinderContact& c, const SampledField& u) {
  return integrate_Q(u, {c.r, 1.0 / (c.r * c.r), 1.0 / (c.r * c.r), c.q});
}

OracleReport compare_1d(double M, double s0, const std::vector<double>& analytic, const std::vector<int>& grids,
                        double tolerance) {
  if (analytic.empty()) throw Error(ErrorKind::InvalidInput, "nothing to compare");
  if (grids.empty()) throw Error(ErrorKind::InvalidInput, "at least one grid is required");
  OracleReport rep;
  rep.analytic = analytic;
  rep.grids = grids;
  rep.tolerance = tolerance;
  const int n = static_cast<int>(analytic.size());
  for (const int N : grids) {
    const auto numeric = fd_eigs_1d(M, s0, n, N);
    double abs_err = 0.0, rel_err = 0.0;
    for (int i = 0; i < n; ++i) {
      const double e = std::abs(numeric[i] - analytic[i]);
      abs_err = std::max(abs_err, e);
      rel_err = std::max(rel_err, e / std::max(std::abs(analytic[i]), 1e-6));
    }
    rep.grid_errors.push_back(abs_err);
    rep.numeric = numeric;
    rep.N = N;
    rep.max_abs_err = abs_err;
    rep.max_rel_err = rel_err;
  }
  if (grids.size() >= 2) {
    const std::size_t k = grids.size();
    const double e1 = rep.grid_errors[k - 2], e2 = rep.grid_errors[k - 1];
    if (e1 > 0.0 && e2 > 0.0 && grids[k - 1] != grids[k - 2]) {
      rep.convergence_order = std::log(e1 / e2) / std::log(static_cast<double>(grids[k - 1]) / grids[k - 2]);
    }
  }
  rep.passed = rep.max_rel_err <= tolerance;
  return rep;
}

}  // namespace capillary
