#include "capillary/curves.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "capillary/error.hpp"

namespace capillary {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Three-point slopes, exact for quadratics on nonuniform grids.
std::vector<double> node_slopes(const std::vector<TabulatedSample>& s, double TabulatedSample::*field) {
  const std::size_t n = s.size();
  std::vector<double> d(n);
  auto f = [&](std::size_t i) { return s[i].*field; };
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hm = s[i].tau - s[i - 1].tau;
    const double hp = s[i + 1].tau - s[i].tau;
    d[i] = -hp / (hm * (hm + hp)) * f(i - 1) + (hp - hm) / (hm * hp) * f(i) + hm / (hp * (hm + hp)) * f(i + 1);
  }
  {
    const double h1 = s[1].tau - s[0].tau;
    const double h2 = s[2].tau - s[1].tau;
    d[0] = -(2 * h1 + h2) / (h1 * (h1 + h2)) * f(0) + (h1 + h2) / (h1 * h2) * f(1) - h1 / (h2 * (h1 + h2)) * f(2);
  }
  {
    const double a = s[n - 1].tau - s[n - 2].tau;
    const double b = s[n - 2].tau - s[n - 3].tau;
    d[n - 1] = (2 * a + b) / (a * (a + b)) * f(n - 1) - (a + b) / (a * b) * f(n - 2) + a / (b * (a + b)) * f(n - 3);
  }
  return d;
}

CurveJet hermite_jet(const SupportCurve::Tabulated& tab, double tau) {
  const auto& s = tab.samples;
  auto it = std::upper_bound(s.begin(), s.end(), tau,
                             [](double t, const TabulatedSample& p) { return t < p.tau; });
  std::size_t i = it == s.begin() ? 0 : static_cast<std::size_t>(it - s.begin()) - 1;
  i = std::min(i, s.size() - 2);

  const double h = s[i + 1].tau - s[i].tau;
  const double u = (tau - s[i].tau) / h;
  const double u2 = u * u;
  const double u3 = u2 * u;

  const double h00 = 2 * u3 - 3 * u2 + 1, h10 = u3 - 2 * u2 + u;
  const double h01 = -2 * u3 + 3 * u2, h11 = u3 - u2;
  const double d00 = 6 * u2 - 6 * u, d10 = 3 * u2 - 4 * u + 1;
  const double d01 = -6 * u2 + 6 * u, d11 = 3 * u2 - 2 * u;
  const double e00 = 12 * u - 6, e10 = 6 * u - 4;
  const double e01 = -12 * u + 6, e11 = 6 * u - 2;

  auto interp = [&](double p0, double m0, double p1, double m1) {
    const double v = h00 * p0 + h10 * h * m0 + h01 * p1 + h11 * h * m1;
    const double dv = (d00 * p0 + d10 * h * m0 + d01 * p1 + d11 * h * m1) / h;
    const double ddv = (e00 * p0 + e10 * h * m0 + e01 * p1 + e11 * h * m1) / (h * h);
    return std::array<double, 3>{v, dv, ddv};
  };
  const auto x = interp(s[i].x, tab.dx[i], s[i + 1].x, tab.dx[i + 1]);
  const auto z = interp(s[i].z, tab.dz[i], s[i + 1].z, tab.dz[i + 1]);
  return {{x[0], z[0]}, {x[1], z[1]}, {x[2], z[2]}};
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + " must be positive and finite");
  }
}

}  // namespace

double parametric_curvature(Vec2 d1, Vec2 d2) {
  const double speed2 = d1.x * d1.x + d1.z * d1.z;
  return (d1.x * d2.z - d1.z * d2.x) / (speed2 * std::sqrt(speed2));
}

SupportCurve SupportCurve::line(double height, double half_domain) {
  require_positive(half_domain, "line half-domain");
  return SupportCurve(Line{height}, {-half_domain, half_domain});
}

SupportCurve SupportCurve::circle(double radius, double center_z) {
  require_positive(radius, "circle radius");
  return SupportCurve(Circle{radius, center_z}, {-M_PI, M_PI});
}

SupportCurve SupportCurve::parabola(double a, double half_domain) {
  require_positive(half_domain, "parabola half-domain");
  if (a == 0.0) throw Error(ErrorKind::InvalidInput, "parabola coefficient must be nonzero");
  return SupportCurve(Parabola{a}, {-half_domain, half_domain});
}

SupportCurve SupportCurve::catenary(double a, double half_domain) {
  require_positive(a, "catenary scale");
  require_positive(half_domain, "catenary half-domain");
  return SupportCurve(Catenary{a}, {-half_domain, half_domain});
}

SupportCurve SupportCurve::graph(std::vector<double> coeffs, double half_domain) {
  require_positive(half_domain, "graph half-domain");
  if (coeffs.empty()) throw Error(ErrorKind::InvalidInput, "graph needs at least one coefficient");
  return SupportCurve(Graph{std::move(coeffs)}, {-half_domain, half_domain});
}

SupportCurve SupportCurve::tabulated(std::vector<TabulatedSample> samples) {
  if (samples.size() < 3) throw Error(ErrorKind::InvalidInput, "tabulated curve needs at least 3 samples");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].tau > samples[i - 1].tau)) {
      throw Error(ErrorKind::InvalidInput, "tabulated samples must be strictly increasing in tau");
    }
  }
  Tabulated tab;
  tab.dx = node_slopes(samples, &TabulatedSample::x);
  tab.dz = node_slopes(samples, &TabulatedSample::z);
  const Interval dom{samples.front().tau, samples.back().tau};
  tab.samples = std::move(samples);
  return SupportCurve(std::move(tab), dom);
}

SupportCurve SupportCurve::load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open curve file " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::InvalidInput, "empty curve file " + path.string());
  line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }), line.end());
  if (line != "tau,x,z") throw Error(ErrorKind::InvalidInput, "curve file header must be tau,x,z");

  std::vector<TabulatedSample> samples;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    TabulatedSample s;
    if (!(row >> s.tau >> s.x >> s.z)) {
      throw Error(ErrorKind::InvalidInput, "malformed row " + std::to_string(lineno) + " in " + path.string());
    }
    samples.push_back(s);
  }
  return tabulated(std::move(samples));
}

SupportCurve SupportCurve::with_orientation(Orientation orientation) const {
  SupportCurve copy = *this;
  copy.orientation_ = orientation;
  return copy;
}

std::string SupportCurve::name() const {
  return std::visit(Overloaded{
                        [](const Line&) { return std::string("line"); },
                        [](const Circle&) { return std::string("circle"); },
                        [](const Parabola&) { return std::string("parabola"); },
                        [](const Catenary&) { return std::string("catenary"); },
                        [](const Graph&) { return std::string("graph"); },
                        [](const Tabulated&) { return std::string("tabulated"); },
                    },
                    shape_);
}

CurveJet SupportCurve::jet(double tau) const {
  const double slack = 1e-12 * (1.0 + std::max(std::abs(domain_.lo), std::abs(domain_.hi)));
  if (!(tau >= domain_.lo - slack && tau <= domain_.hi + slack)) {
    throw Error(ErrorKind::OutOfDomain, "tau = " + std::to_string(tau) + " outside curve domain");
  }
  return std::visit(
      Overloaded{
          [&](const Line& l) -> CurveJet { return {{tau, l.height}, {1.0, 0.0}, {0.0, 0.0}}; },
          [&](const Circle& c) -> CurveJet {
            const double s = std::sin(tau), co = std::cos(tau);
            return {{c.radius * s, c.center_z - c.radius * co}, {c.radius * co, c.radius * s}, {-c.radius * s, c.radius * co}};
          },
          [&](const Parabola& p) -> CurveJet { return {{tau, p.a * tau * tau}, {1.0, 2.0 * p.a * tau}, {0.0, 2.0 * p.a}}; },
          [&](const Catenary& c) -> CurveJet {
            const double u = tau / c.a;
            return {{tau, c.a * std::cosh(u)}, {1.0, std::sinh(u)}, {0.0, std::cosh(u) / c.a}};
          },
          [&](const Graph& g) -> CurveJet {
            double v = 0.0, d = 0.0, dd = 0.0;
            for (std::size_t i = g.coeffs.size(); i-- > 0;) {
              dd = dd * tau + 2.0 * d;
              d = d * tau + v;
              v = v * tau + g.coeffs[i];
            }
            return {{tau, v}, {1.0, d}, {0.0, dd}};
          },
          [&](const Tabulated& t) -> CurveJet { return hermite_jet(t, std::clamp(tau, domain_.lo, domain_.hi)); },
      },
      shape_);
}

CurvePoint SupportCurve::eval(double tau) const {
  const CurveJet j = jet(tau);
  const double speed = norm(j.d1);
  if (!(speed > 0.0)) throw Error(ErrorKind::NonRegularPoint, "zero speed at tau = " + std::to_string(tau));

  CurvePoint p;
  p.tau = tau;
  p.position = j.c;
  p.tangent = (1.0 / speed) * j.d1;
  p.normal = rot90(p.tangent);
  p.kappa = parametric_curvature(j.d1, j.d2);
  if (orientation_ == Orientation::FluidAbove) {
    p.normal = -p.normal;
    p.kappa = -p.kappa;
  }
  return p;
}

SymmetryReport check_symmetry(const SupportCurve& curve, int n_samples) {
  if (n_samples < 2) throw Error(ErrorKind::InvalidInput, "symmetry check needs at least 2 samples");
  const Interval dom = curve.domain();
  const double reach = std::min(-dom.lo, dom.hi);
  if (!(reach > 0.0)) throw Error(ErrorKind::InvalidInput, "curve domain is not symmetric about 0");

  SymmetryReport rep;
  for (int i = 0; i < n_samples; ++i) {
    const double tau = reach * i / (n_samples - 1);
    const Vec2 a = curve.jet(tau).c;
    const Vec2 b = curve.jet(-tau).c;
    const double dx = std::abs(a.x + b.x);
    const double dz = std::abs(b.z - a.z);
    rep.max_x_defect = std::max(rep.max_x_defect, dx);
    rep.max_z_defect = std::max(rep.max_z_defect, dz);
    if (dx > 1e-10 * (1.0 + std::abs(a.x)) || dz > 1e-10 * (1.0 + std::abs(a.z))) rep.passed = false;
  }
  rep.max_defect = std::max(rep.max_x_defect, rep.max_z_defect);
  return rep;
}

}  // namespace capillary
