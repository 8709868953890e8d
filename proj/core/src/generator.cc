#include "spatch/generator.hh"

#include <Eigen/Core>
#include <cmath>
#include <string>
#include <vector>

#include "spatch/domain.hh"
#include "spatch/errors.hh"
#include "spatch/types.hh"

namespace spatch {

namespace {

using Poly = std::vector<double>;  // monomial coefficients, index = power

Poly p_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void p_axpy(Poly& acc, const Poly& x, double s) {
  if (acc.size() < x.size()) acc.resize(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] += s * x[i];
}

std::vector<Poly> power_table(const Poly& base, int max_power) {
  std::vector<Poly> out;
  out.reserve(max_power + 1);
  out.push_back({1.0});
  for (int p = 1; p <= max_power; ++p) out.push_back(p_mul(out.back(), base));
  return out;
}

// Dense bivariate polynomial of bounded total degree.
struct BiPoly {
  int deg;
  std::vector<std::vector<double>> a;

  explicit BiPoly(int d) : deg(d), a(d + 1, std::vector<double>(d + 1, 0.0)) {}

  BiPoly dx() const {
    BiPoly out(std::max(0, deg - 1));
    for (int p = 1; p <= deg; ++p)
      for (int q = 0; q + p <= deg; ++q) out.a[p - 1][q] = p * a[p][q];
    return out;
  }

  BiPoly dy() const {
    BiPoly out(std::max(0, deg - 1));
    for (int p = 0; p <= deg; ++p)
      for (int q = 1; q + p <= deg; ++q) out.a[p][q - 1] = q * a[p][q];
    return out;
  }

  Poly along(const std::vector<Poly>& xp, const std::vector<Poly>& yp) const {
    Poly out{0.0};
    for (int p = 0; p <= deg; ++p)
      for (int q = 0; p + q <= deg; ++q) {
        if (a[p][q] == 0.0) continue;
        p_axpy(out, p_mul(xp[p], yp[q]), a[p][q]);
      }
    return out;
  }
};

// Exact monomial-to-Bernstein conversion at degree d.
std::vector<double> to_bezier(const Poly& a, int d) {
  if (static_cast<int>(a.size()) > d + 1)
    throw NumericalError("generator: polynomial degree exceeds the Bezier degree");
  std::vector<double> b(d + 1, 0.0);
  for (int j = 0; j <= d; ++j)
    for (int k = 0; k <= j && k < static_cast<int>(a.size()); ++k)
      b[j] += binomial(j, k) / binomial(d, k) * a[k];
  return b;
}

Eigen::Matrix3d random_rotation(std::mt19937_64& rng) {
  double q[4];
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& v : q) {
      v = uniform(rng, -1.0, 1.0);
      norm2 += v * v;
    }
  } while (norm2 < 1e-8);
  double inv = 1.0 / std::sqrt(norm2);
  double w = q[0] * inv, x = q[1] * inv, y = q[2] * inv, z = q[3] * inv;
  Eigen::Matrix3d r;
  r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return r;
}

}  // namespace

double uniform(std::mt19937_64& rng, double lo, double hi) {
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

Ribbon make_ribbon(const RibbonSpec& spec) {
  const int n = spec.n;
  const int d = spec.degree;
  if (n < 3 || n > 12)
    throw ValidationError("generator needs 3 <= n <= 12, got n = " + std::to_string(n));
  if (d < 2 || d > 13)
    throw ValidationError("generator needs 2 <= degree <= 13, got degree = " + std::to_string(d));
  if (!(spec.amplitude >= 0.0))
    throw ValidationError("generator amplitude must be non-negative");

  std::mt19937_64 rng(spec.seed);

  // Height field of total degree min(3, d-1): keeps the boundary rows and the
  // cross rows within Bezier degree d.
  const int fdeg = std::min(3, d - 1);
  BiPoly f(fdeg);
  for (int p = 0; p <= fdeg; ++p)
    for (int q = 0; p + q <= fdeg; ++q) {
      if (p + q == 0) continue;
      f.a[p][q] = uniform(rng, -spec.amplitude, spec.amplitude);
    }
  BiPoly fx = f.dx(), fy = f.dy();

  Eigen::Matrix3d rot = random_rotation(rng);
  double scale = uniform(rng, 0.75, 1.3);
  Point3 shift(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
  auto placed = [&](const Point3& p) -> Point3 { return rot * (scale * p) + shift; };

  DomainPolygon poly(n);
  Ribbon out;
  out.sides.resize(n);
  for (int i = 0; i < n; ++i) {
    Point2 a = poly.vertex(i);
    Point2 b = poly.vertex(i + 1);
    Poly ex = {a.x(), b.x() - a.x()};
    Poly ey = {a.y(), b.y() - a.y()};
    auto xp = power_table(ex, fdeg);
    auto yp = power_table(ey, fdeg);
    Poly z = f.along(xp, yp);

    // Quadratic in-plane cross field: the ends run along the neighboring
    // edges and the middle coefficient -(v_i + v_{i+1}) closes the corner
    // twist identities exactly.
    Point2 w0 = poly.vertex(i - 1) - a;
    Point2 w1 = poly.vertex(i + 2) - b;
    Point2 wm = -(a + b);
    Poly wx = {w0.x(), 2.0 * (wm.x() - w0.x()), w0.x() - 2.0 * wm.x() + w1.x()};
    Poly wy = {w0.y(), 2.0 * (wm.y() - w0.y()), w0.y() - 2.0 * wm.y() + w1.y()};

    Poly gz{0.0};
    p_axpy(gz, p_mul(fx.along(xp, yp), wx), 1.0);
    p_axpy(gz, p_mul(fy.along(xp, yp), wy), 1.0);

    auto bx = to_bezier(ex, d), by = to_bezier(ey, d), bz = to_bezier(z, d);
    auto gxb = to_bezier(wx, d), gyb = to_bezier(wy, d), gzb = to_bezier(gz, d);

    RibbonSide& side = out.sides[i];
    side.outer.resize(d + 1);
    side.inner.resize(d + 1);
    for (int j = 0; j <= d; ++j) {
      Point3 boundary(bx[j], by[j], bz[j]);
      Point3 cross(gxb[j], gyb[j], gzb[j]);
      side.outer[j] = placed(boundary);
      side.inner[j] = placed(boundary + cross / d);
    }
  }

  RibbonValidation rep = validate_ribbon(out, 1e-9);
  if (!rep.passed)
    throw NumericalError("generator produced an incompatible ribbon: " + rep.violations.front());
  return out;
}

}  // namespace spatch
