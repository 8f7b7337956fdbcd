#include "capillary/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "capillary/error.hpp"

namespace capillary {

namespace {

constexpr double kAbsTol = 1e-13;

using Fn = std::function<double(double)>;

bool width_converged(double lo, double hi) {
  const double scale = std::max(std::abs(lo), std::abs(hi));
  return hi - lo <= kAbsTol || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * scale;
}

// Bisection on a sign-changing bracket, then two secant steps that are kept
// only if they stay inside the bracket and reduce |f|.
double refine(const Fn& f, double lo, double hi, bool geometric = false) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  for (int it = 0; it < 4000 && !width_converged(lo, hi); ++it) {
    const double mid = (geometric && lo > 0.0 && hi > 4.0 * lo) ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  double best = std::abs(flo) <= std::abs(fhi) ? lo : hi;
  double fbest = std::min(std::abs(flo), std::abs(fhi));
  double x0 = lo, f0 = flo, x1 = hi, f1 = fhi;
  for (int step = 0; step < 2; ++step) {
    if (f1 == f0) break;
    const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    if (!(x2 >= lo && x2 <= hi)) break;
    const double f2 = f(x2);
    if (std::abs(f2) < fbest) {
      best = x2;
      fbest = std::abs(f2);
    }
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f2;
  }
  return best;
}

double sinc(double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

}  // namespace

std::string_view to_string(RootEquation eq) {
  switch (eq) {
    case RootEquation::Exponential: return "Exponential";
    case RootEquation::TanMinus: return "TanMinus";
    case RootEquation::TanPlus: return "TanPlus";
  }
  return "Unknown";
}

double tan_asymptote(int k, double s0) { return (2.0 * k - 1.0) * M_PI / (2.0 * s0); }

double tan_minus_residual(double beta, double M, double s0) {
  return beta * std::sin(beta * s0) + M * std::cos(beta * s0);
}

// Divided by beta so that the trivial zero at beta = 0 disappears; the limit
// at 0 is 1 - M s0.
double tan_plus_residual(double beta, double M, double s0) {
  return std::cos(beta * s0) - M * s0 * sinc(beta * s0);
}

// e^{2 beta s0} (beta - T) = beta + T, scaled by e^{-2 beta s0}. This is the
// branch of the squared equation that carries the root beta > T.
double exponential_residual(double beta, double T, double s0) {
  return (beta - T) - (beta + T) * std::exp(-2.0 * beta * s0);
}

std::optional<RootRecord> solve_exponential(double T, double s0) {
  if (!(s0 > 0.0)) throw Error(ErrorKind::NonPositiveHalfWidth, "half-width s0 must be positive");
  if (!(T > 0.0)) return std::nullopt;

  // Square root of the equation in log form, in the offset d = beta - T so
  // that roots crowding against T keep full precision.
  auto g = [T, s0](double d) { return 2.0 * (T + d) * s0 - std::log1p(2.0 * T / d); };

  double lo = T;
  for (int i = 0; i < 80 && !(g(lo) < 0.0); ++i) lo *= 1e-4;
  double hi = std::max(T, 1.0 / s0);
  for (int i = 0; i < 2000 && !(g(hi) > 0.0); ++i) hi *= 2.0;

  const double d = refine(g, lo, hi, /*geometric=*/true);
  RootRecord rec;
  rec.beta = T + d;
  rec.equation = RootEquation::Exponential;
  rec.branch_k = 0;
  rec.ordinal = 1;
  rec.lhs = 2.0 * rec.beta * s0;
  rec.residual = std::abs(rec.lhs - std::log1p(2.0 * T / d));
  rec.bracket = {T + lo, T + hi};
  return rec;
}

std::optional<RootRecord> solve_exponential_odd(double T, double s0) {
  if (!(s0 > 0.0)) throw Error(ErrorKind::NonPositiveHalfWidth, "half-width s0 must be positive");
  if (!(T > 0.0) || !(s0 * T > 1.0)) return std::nullopt;

  // In the offset d = T - beta: positive near d = T, -inf as d -> 0.
  auto g = [T, s0](double d) { return 2.0 * (T - d) * s0 + std::log(d) - std::log(2.0 * T - d); };

  double hi = 0.5 * T;
  for (int i = 0; i < 1100 && !(g(hi) > 0.0); ++i) hi = T - 0.5 * (T - hi);
  if (!(g(hi) > 0.0)) return std::nullopt;
  double lo = 0.5 * hi;
  for (int i = 0; i < 1100 && !(g(lo) < 0.0); ++i) lo *= 0.5;

  const double d = refine(g, lo, hi, /*geometric=*/true);
  RootRecord rec;
  rec.beta = T - d;
  rec.equation = RootEquation::Exponential;
  rec.branch_k = 1;
  rec.ordinal = 1;
  rec.lhs = 2.0 * rec.beta * s0;
  rec.residual = std::abs(rec.lhs - (std::log(2.0 * T - d) - std::log(d)));
  rec.bracket = {T - hi, T - lo};
  return rec;
}

std::vector<RootRecord> solve_tan_branches(double M, double s0, int k_max) {
  if (!(s0 > 0.0)) throw Error(ErrorKind::NonPositiveHalfWidth, "half-width s0 must be positive");
  if (M == 0.0) throw Error(ErrorKind::DegenerateMu, "M = 0 has roots on the asymptotes; use the closed form");
  if (k_max < 1) throw Error(ErrorKind::InvalidInput, "k_max must be at least 1");

  const double quarter = M_PI / (2.0 * s0);
  const double eps0 = 1e-9 * quarter;

  std::vector<RootRecord> roots;
  for (const RootEquation eq : {RootEquation::TanMinus, RootEquation::TanPlus}) {
    Fn f = eq == RootEquation::TanMinus ? Fn([M, s0](double b) { return tan_minus_residual(b, M, s0); })
                                        : Fn([M, s0](double b) { return tan_plus_residual(b, M, s0); });
    for (int k = 0; k < k_max; ++k) {
      const double a = k == 0 ? 0.0 : tan_asymptote(k, s0);
      const double b = tan_asymptote(k + 1, s0);
      double lo = 0.0, hi = 0.0;
      bool found = false;
      for (int attempt = 0; attempt < 5 && !found; ++attempt) {
        const double eps = eps0 * std::pow(1e-3, attempt);
        lo = a + eps;
        hi = b - eps;
        const double flo = f(lo), fhi = f(hi);
        const bool lo_zero = flo == 0.0 && k > 0;
        found = lo_zero || fhi == 0.0 || (flo != 0.0 && (flo < 0.0) != (fhi < 0.0));
      }
      if (!found) continue;

      RootRecord rec;
      rec.beta = refine(f, lo, hi);
      rec.equation = eq;
      rec.branch_k = k;
      rec.bracket = {lo, hi};
      rec.lhs = std::tan(rec.beta * s0);
      const double rhs = eq == RootEquation::TanMinus ? -M / rec.beta : rec.beta / M;
      rec.residual = std::abs(rec.lhs - rhs);
      roots.push_back(rec);
    }
  }

  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x.beta < y.beta; });
  int ordinal_minus = 0, ordinal_plus = 0;
  for (auto& r : roots) r.ordinal = r.equation == RootEquation::TanMinus ? ++ordinal_minus : ++ordinal_plus;
  return roots;
}

std::optional<RootRecord> first_tan_root(const std::vector<RootRecord>& roots, RootEquation eq) {
  for (const auto& r : roots) {
    if (r.equation == eq) return r;
  }
  return std::nullopt;
}

}  // namespace capillary
