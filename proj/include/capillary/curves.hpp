#pragma once

#include <cmath>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace capillary {

/// A point or direction in the xz-plane of the cross section.
struct Vec2 {
  double x{0.0};
  double z{0.0};

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.z + b.z}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.z - b.z}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.z}; }
  friend Vec2 operator-(Vec2 a) { return {-a.x, -a.z}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.z * b.z; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.z); }
/// Counter-clockwise quarter turn.
inline Vec2 rot90(Vec2 a) { return {-a.z, a.x}; }

struct Interval {
  double lo{0.0};
  double hi{0.0};

  double width() const { return hi - lo; }
  bool contains(double t) const { return t >= lo && t <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Which side of the support curve the liquid occupies.
///
/// FluidBelow is the default configuration: the liquid sits under the free
/// interface, on the side of the curve's counter-clockwise normal (above the
/// curve for graphs over x). Curvature is measured with respect to that
/// normal, so a parabola opening upward has positive curvature. FluidAbove
/// puts the liquid on the opposite side and negates the curvature.
enum class Orientation { FluidBelow, FluidAbove };

struct CurvePoint {
  double tau{0.0};
  Vec2 position;
  Vec2 tangent;
  /// Unit normal pointing into the liquid side.
  Vec2 normal;
  /// Signed curvature with respect to `normal`.
  double kappa{0.0};
};

/// Position and first two parameter derivatives of a curve at one parameter.
struct CurveJet {
  Vec2 c;
  Vec2 d1;
  Vec2 d2;
};

struct TabulatedSample {
  double tau{0.0};
  double x{0.0};
  double z{0.0};
};

/// Signed curvature (x'z'' - z'x'') / (x'^2 + z'^2)^(3/2) of a parametric curve.
double parametric_curvature(Vec2 d1, Vec2 d2);

/// Symmetric planar generating curve c(tau) = (x(tau), z(tau)) of a
/// cylindrical support surface whose rulings run along y.
///
/// Built-in kinds are evaluated in closed form. Tabulated curves use cubic
/// Hermite interpolation on the samples with centered-difference slopes.
/// Instances are immutable.
class SupportCurve {
 public:
  struct Line {
    double height;
  };
  /// Circle of radius R centered at (0, center_z), parametrized from the
  /// bottom point: c(tau) = (R sin tau, center_z - R cos tau).
  struct Circle {
    double radius;
    double center_z;
  };
  /// z = a x^2.
  struct Parabola {
    double a;
  };
  /// z = a cosh(x / a).
  struct Catenary {
    double a;
  };
  /// z = sum_i coeffs[i] x^i.
  struct Graph {
    std::vector<double> coeffs;
  };
  struct Tabulated {
    std::vector<TabulatedSample> samples;
    std::vector<double> dx;
    std::vector<double> dz;
  };
  using Shape = std::variant<Line, Circle, Parabola, Catenary, Graph, Tabulated>;

  static SupportCurve line(double height, double half_domain = 10.0);
  static SupportCurve circle(double radius, double center_z);
  static SupportCurve parabola(double a = 1.0, double half_domain = 10.0);
  static SupportCurve catenary(double a = 1.0, double half_domain = 5.0);
  static SupportCurve graph(std::vector<double> coeffs, double half_domain = 10.0);
  static SupportCurve tabulated(std::vector<TabulatedSample> samples);
  /// Reads a CSV file with header `tau,x,z`.
  static SupportCurve load_csv(const std::filesystem::path& path);

  SupportCurve with_orientation(Orientation orientation) const;

  const Shape& shape() const { return shape_; }
  Orientation orientation() const { return orientation_; }
  Interval domain() const { return domain_; }
  std::string name() const;

  /// Raw parametric derivatives, independent of orientation.
  CurveJet jet(double tau) const;
  CurvePoint eval(double tau) const;

 private:
  SupportCurve(Shape shape, Interval domain) : shape_(std::move(shape)), domain_(domain) {}

  Shape shape_;
  Interval domain_;
  Orientation orientation_{Orientation::FluidBelow};
};

struct SymmetryReport {
  double max_x_defect{0.0};
  double max_z_defect{0.0};
  double max_defect{0.0};
  bool passed{true};
};

/// Compares c(-tau) against the mirror image of c(tau) on n_samples parameters
/// spread over the nonnegative half of the domain.
SymmetryReport check_symmetry(const SupportCurve& curve, int n_samples);

}  // namespace capillary
