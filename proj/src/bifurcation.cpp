#include "capillary/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "capillary/error.hpp"
#include "capillary/roots.hpp"

namespace capillary {

namespace {

constexpr int kSamples = 2000;
constexpr double kTauTol = 1e-10;
constexpr double kSameRoot = 1e-6;
constexpr double kTransversal = 1e-6;

using Value = std::function<std::optional<double>(const CylinderContact&)>;

std::optional<CylinderContact> try_contact(const SupportCurve& curve, double tau, double gamma, int delta) {
  try {
    return cylinder_contact(curve, tau, gamma, delta);
  } catch (const Error&) {
    return std::nullopt;
  }
}

void check_range(const SupportCurve& curve, Interval range) {
  if (!(range.lo < range.hi)) throw Error(ErrorKind::EmptyRange, "tau range is empty");
  if (!(range.lo > 0.0) || range.hi > curve.domain().hi) {
    throw Error(ErrorKind::InvalidInput, "tau range must lie inside (0, " + std::to_string(curve.domain().hi) + "]");
  }
}

double sample_tau(Interval range, int i) { return range.lo + range.width() * i / (kSamples - 1); }

// Sign-change scan of `value` over the samples where it is defined, with
// bisection in tau. Returns the refined roots; `any_defined` reports whether
// the value was defined anywhere.
std::vector<double> scan_roots(const SupportCurve& curve, double gamma, int delta, Interval range, const Value& value,
                               bool& any_defined) {
  auto eval = [&](double tau) -> std::optional<double> {
    const auto c = try_contact(curve, tau, gamma, delta);
    if (!c) return std::nullopt;
    return value(*c);
  };

  std::vector<double> roots;
  any_defined = false;
  std::optional<double> prev;
  double prev_tau = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double tau = sample_tau(range, i);
    const auto v = eval(tau);
    if (v) any_defined = true;
    if (v && *v == 0.0) {
      roots.push_back(tau);
    } else if (v && prev && *prev != 0.0 && (*v < 0.0) != (*prev < 0.0)) {
      double lo = prev_tau, hi = tau, flo = *prev;
      while (hi - lo > kTauTol) {
        const double mid = 0.5 * (lo + hi);
        const auto fm = eval(mid);
        if (!fm) break;
        if (*fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((*fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = *fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev = v;
    prev_tau = tau;
  }
  return roots;
}

BifurcationResult make_result(const CylinderContact& c, BifurcationCase kind, double beta, EigenForm form) {
  BifurcationResult b;
  b.kind = kind;
  b.tau0 = c.tau0;
  b.s0 = c.s0;
  b.r = c.r;
  b.beta = beta;
  b.center_z = c.center_z;
  b.mu = c.mu;
  b.gamma = c.gamma;
  b.delta = c.delta;
  b.form = form;
  b.transversal = kind == BifurcationCase::Unit || std::abs(beta - 1.0) > kTransversal;
  return b;
}

void sort_unique(std::vector<BifurcationResult>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.tau0 < b.tau0; });
  std::vector<BifurcationResult> out;
  for (const auto& b : v) {
    if (out.empty() || std::abs(b.tau0 - out.back().tau0) >= kSameRoot) out.push_back(b);
  }
  v = std::move(out);
}

}  // namespace

std::string_view to_string(BifurcationCase c) {
  switch (c) {
    case BifurcationCase::Subcritical: return "Subcritical";
    case BifurcationCase::Unit: return "Unit";
    case BifurcationCase::Supercritical: return "Supercritical";
  }
  return "Unknown";
}

std::string_view to_string(EigenForm f) {
  switch (f) {
    case EigenForm::Cos: return "cos";
    case EigenForm::Sin: return "sin";
    case EigenForm::Const: return "const";
    case EigenForm::Linear: return "linear";
    case EigenForm::Cosh: return "cosh";
  }
  return "unknown";
}

Interval default_tau_range(const SupportCurve& curve) {
  const double hi = curve.domain().hi;
  if (!(hi > 0.0)) throw Error(ErrorKind::InvalidInput, "curve domain has no positive half");
  return {1e-3 * hi, hi};
}

std::vector<BifurcationResult> scan_subcritical(const SupportCurve& curve, double gamma, int delta,
                                                Interval tau_range) {
  check_range(curve, tau_range);
  std::vector<BifurcationResult> out;
  bool defined = false;
  for (const auto eq : {RootEquation::TanMinus, RootEquation::TanPlus}) {
    const Value value = [eq](const CylinderContact& c) -> std::optional<double> {
      if (!(c.r < 1.0)) return std::nullopt;
      const double beta = std::sqrt(1.0 - c.r * c.r);
      const double M = c.mu / std::sin(c.gamma);
      return eq == RootEquation::TanMinus ? tan_minus_residual(beta, M, c.s0) : tan_plus_residual(beta, M, c.s0);
    };
    for (const double tau : scan_roots(curve, gamma, delta, tau_range, value, defined)) {
      const auto c = try_contact(curve, tau, gamma, delta);
      if (!c || !(c->r < 1.0)) continue;
      out.push_back(make_result(*c, BifurcationCase::Subcritical, std::sqrt(1.0 - c->r * c->r),
                                eq == RootEquation::TanMinus ? EigenForm::Cos : EigenForm::Sin));
    }
  }
  if (!defined) throw Error(ErrorKind::EmptyRange, "no configuration with r < 1 in the tau range");
  sort_unique(out);
  return out;
}

std::vector<UnitCheck> unit_checks(const SupportCurve& curve, double gamma, int delta, Interval tau_range) {
  check_range(curve, tau_range);
  const Value value = [](const CylinderContact& c) -> std::optional<double> { return c.r - 1.0; };
  bool defined = false;
  std::vector<UnitCheck> out;
  for (const double tau : scan_roots(curve, gamma, delta, tau_range, value, defined)) {
    const auto c = try_contact(curve, tau, gamma, delta);
    if (!c) continue;
    UnitCheck u;
    u.tau0 = c->tau0;
    u.s0 = c->s0;
    u.r = c->r;
    u.mu = c->mu;
    const double sg = std::sin(c->gamma);
    if (std::abs(c->mu) <= 1e-12) {
      u.matched = true;
    } else {
      u.sin_over_mu = sg / c->mu;
      u.matched = std::abs(c->s0 - *u.sin_over_mu) <= 1e-6 * std::abs(*u.sin_over_mu);
    }
    out.push_back(u);
  }
  return out;
}

std::optional<BifurcationResult> scan_unit(const SupportCurve& curve, double gamma, int delta, Interval tau_range) {
  for (const auto& u : unit_checks(curve, gamma, delta, tau_range)) {
    if (!u.matched) continue;
    const auto c = cylinder_contact(curve, u.tau0, gamma, delta);
    return make_result(c, BifurcationCase::Unit, 0.0, u.sin_over_mu ? EigenForm::Linear : EigenForm::Const);
  }
  return std::nullopt;
}

std::optional<BifurcationResult> scan_unit(const SupportCurve& curve, double gamma, int delta) {
  return scan_unit(curve, gamma, delta, default_tau_range(curve));
}

std::vector<BifurcationResult> scan_supercritical(const SupportCurve& curve, double gamma, int delta,
                                                  Interval tau_range) {
  check_range(curve, tau_range);
  const Value value = [](const CylinderContact& c) -> std::optional<double> {
    if (!(c.r > 1.0)) return std::nullopt;
    const double beta = std::sqrt(c.r * c.r - 1.0);
    return exponential_residual(beta, c.mu / std::sin(c.gamma), c.s0);
  };
  bool defined = false;
  std::vector<BifurcationResult> out;
  for (const double tau : scan_roots(curve, gamma, delta, tau_range, value, defined)) {
    const auto c = try_contact(curve, tau, gamma, delta);
    if (!c || !(c->r > 1.0)) continue;
    const double beta = std::sqrt(c->r * c->r - 1.0);
    if (!(beta > c->mu / std::sin(c->gamma))) continue;
    out.push_back(make_result(*c, BifurcationCase::Supercritical, beta, EigenForm::Cosh));
  }
  if (!defined) throw Error(ErrorKind::EmptyRange, "no configuration with r > 1 in the tau range");
  sort_unique(out);
  return out;
}

DetectionReport detect_bifurcation(const SupportCurve& curve, double gamma, int delta, Interval tau_range) {
  check_range(curve, tau_range);
  DetectionReport rep;
  std::ostringstream why;

  auto run = [&](const char* name, auto&& scan) {
    try {
      auto found = scan();
      why << name << ": " << found.size() << " root(s). ";
      rep.candidates.insert(rep.candidates.end(), found.begin(), found.end());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EmptyRange) throw;
      why << name << ": not applicable. ";
    }
  };
  run("r < 1", [&] { return scan_subcritical(curve, gamma, delta, tau_range); });
  rep.unit_checks = unit_checks(curve, gamma, delta, tau_range);
  std::size_t unit_matches = 0;
  for (const auto& u : rep.unit_checks) {
    if (!u.matched) continue;
    const auto c = cylinder_contact(curve, u.tau0, gamma, delta);
    rep.candidates.push_back(make_result(c, BifurcationCase::Unit, 0.0, u.sin_over_mu ? EigenForm::Linear : EigenForm::Const));
    ++unit_matches;
  }
  why << "r = 1: " << rep.unit_checks.size() << " crossing(s), " << unit_matches << " match(es). ";
  run("r > 1", [&] { return scan_supercritical(curve, gamma, delta, tau_range); });

  sort_unique(rep.candidates);
  const int count = static_cast<int>(rep.candidates.size());
  for (auto& b : rep.candidates) b.multiplicity = count;

  if (count == 0) {
    why << "No bifurcation: 0 is not an eigenvalue of the n = 1 problem in this range.";
  } else if (count > 1) {
    why << "Not certified: " << count << " candidates, uniqueness fails.";
  } else if (!rep.candidates.front().transversal) {
    why << "Not certified: beta = 1, transversality fails.";
  } else {
    rep.certified = true;
    why << "Certified " << to_string(rep.candidates.front().kind) << " bifurcation at tau0 = " << rep.candidates.front().tau0
        << ".";
  }
  rep.explanation = why.str();
  return rep;
}

double analytic_lambda(const BifurcationResult& b, int n) {
  const double r2 = b.r * b.r;
  switch (b.kind) {
    case BifurcationCase::Subcritical: return n * n + (b.beta * b.beta - 1.0) / r2;
    case BifurcationCase::Unit: return n * n - 1.0 / r2;
    case BifurcationCase::Supercritical: return n * n - (1.0 + b.beta * b.beta) / r2;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double eigenfunction(const BifurcationResult& b, double s) {
  switch (b.form) {
    case EigenForm::Cos: return std::cos(b.beta * s);
    case EigenForm::Sin: return std::sin(b.beta * s);
    case EigenForm::Const: return 1.0;
    case EigenForm::Linear: return s;
    case EigenForm::Cosh: return std::cosh(b.beta * s);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::vector<ResidualSample> residual_curves(const SupportCurve& curve, double gamma, int delta, Interval tau_range,
                                            int n) {
  check_range(curve, tau_range);
  if (n < 2) throw Error(ErrorKind::InvalidInput, "residual curve needs at least 2 samples");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<ResidualSample> out;
  for (int i = 0; i < n; ++i) {
    ResidualSample row{tau_range.lo + tau_range.width() * i / (n - 1), nan, nan};
    if (const auto c = try_contact(curve, row.tau, gamma, delta)) {
      const double M = c->mu / std::sin(c->gamma);
      if (c->r < 1.0) {
        const double beta = std::sqrt(1.0 - c->r * c->r);
        row.residual_v1 = tan_minus_residual(beta, M, c->s0) * tan_plus_residual(beta, M, c->s0);
      } else if (c->r > 1.0) {
        row.residual_v3 = exponential_residual(std::sqrt(c->r * c->r - 1.0), M, c->s0);
      }
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace capillary
