#include "capillary/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "capillary/error.hpp"

namespace capillary {

int sturm_count(const SymTridiagonal& t, long double x) {
  const std::size_t n = t.size();
  constexpr long double tiny = std::numeric_limits<long double>::min();
  int count = 0;
  long double q = 1.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const long double e = i == 0 ? 0.0L : static_cast<long double>(t.off[i - 1]);
    q = static_cast<long double>(t.diag[i]) - x - (i == 0 ? 0.0L : e * e / q);
    if (q == 0.0L) q = -tiny;
    if (q < 0.0L) ++count;
  }
  return count;
}

void gershgorin(const SymTridiagonal& t, double& lo, double& hi) {
  const std::size_t n = t.size();
  lo = std::numeric_limits<double>::infinity();
  hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(t.off[i - 1]);
    if (i + 1 < n) radius += std::abs(t.off[i]);
    lo = std::min(lo, t.diag[i] - radius);
    hi = std::max(hi, t.diag[i] + radius);
  }
}

std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, int count) {
  const std::size_t n = t.size();
  if (n == 0 || t.off.size() + 1 != n) throw Error(ErrorKind::InvalidInput, "malformed tridiagonal matrix");
  if (count < 0 || static_cast<std::size_t>(count) > n) throw Error(ErrorKind::InvalidInput, "too many eigenvalues requested");

  double glo = 0.0, ghi = 0.0;
  gershgorin(t, glo, ghi);
  const long double span = std::max(std::abs(glo), std::abs(ghi));

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  long double floor = glo;
  for (int j = 0; j < count; ++j) {
    long double lo = floor;
    long double hi = ghi;
    for (int it = 0; it < 256; ++it) {
      const long double mid = 0.5L * (lo + hi);
      if (hi - lo <= 4.0L * std::numeric_limits<long double>::epsilon() * span) break;
      if (sturm_count(t, mid) > j) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    const long double value = 0.5L * (lo + hi);
    out.push_back(static_cast<double>(value));
    floor = lo;
  }
  return out;
}

std::vector<double> eigenvector(const SymTridiagonal& t, double eigenvalue) {
  const std::size_t n = t.size();
  if (n == 0 || t.off.size() + 1 != n) throw Error(ErrorKind::InvalidInput, "malformed tridiagonal matrix");
  const long double shift = eigenvalue - 1e-9 * (1.0 + std::abs(eigenvalue));

  std::vector<long double> v(n, 1.0L);
  std::vector<long double> c(n), d(n);
  for (int sweep = 0; sweep < 6; ++sweep) {
    // Thomas solve of (T - shift) w = v.
    long double denom = t.diag[0] - shift;
    c[0] = n > 1 ? t.off[0] / denom : 0.0L;
    d[0] = v[0] / denom;
    for (std::size_t i = 1; i < n; ++i) {
      const long double e = t.off[i - 1];
      denom = (t.diag[i] - shift) - e * c[i - 1];
      if (denom == 0.0L) denom = std::numeric_limits<long double>::epsilon();
      c[i] = i + 1 < n ? t.off[i] / denom : 0.0L;
      d[i] = (v[i] - e * d[i - 1]) / denom;
    }
    v[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) v[i] = d[i] - c[i] * v[i + 1];

    long double norm2 = 0.0L;
    for (const auto x : v) norm2 += x * x;
    const long double inv = 1.0L / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
  }

  std::size_t peak = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(v[i]) > std::abs(v[peak])) peak = i;
  }
  const long double sign = v[peak] < 0.0L ? -1.0L : 1.0L;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(sign * v[i]);
  return out;
}

}  // namespace capillary
