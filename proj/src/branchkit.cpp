#include "reslab/branchkit.hpp"

#include <cmath>

namespace reslab::branch {

cplx c(cplx z) {
  if (z == cplx(0.0)) throw domain_error("c(z): z = 0");
  return 0.5 * (z + 1.0 / z);
}

cplx s(cplx z) {
  if (z == cplx(0.0)) throw domain_error("s(z): z = 0");
  return 0.5 * (z - 1.0 / z);
}

cplx sqrt_principal(cplx z, Side side) {
  const double x = z.real(), y = z.imag();
  if (y == 0.0 && x <= 0.0) {
    if (x == 0.0) return 0.0;
    if (side == Side::none)
      throw domain_error("sqrt_principal: point on the cut (-inf, 0] needs a side");
    const double v = std::sqrt(-x);
    return side == Side::plus ? cplx(0.0, v) : cplx(0.0, -v);
  }
  // Cartesian closed form; sign(y) with the y > 0 convention unreachable at
  // y == 0 here except x > 0, where the imaginary part vanishes anyway.
  const double m = std::hypot(x, y);
  const double re = std::sqrt(0.5 * (m + x));
  const double im = std::copysign(std::sqrt(0.5 * (m - x)), y);
  return {re, im};
}

cplx two_sqrt_product(cplx z, Side side) {
  const double x = z.real(), y = z.imag();
  if (y == 0.0) {
    if (x >= 1.0) return std::sqrt(x * x - 1.0);
    if (x <= -1.0) return -std::sqrt(x * x - 1.0);
    if (side == Side::none)
      throw domain_error("two_sqrt_product: point on the cut [-1, 1] needs a side");
    const double v = std::sqrt(1.0 - x * x);
    return side == Side::plus ? cplx(0.0, v) : cplx(0.0, -v);
  }
  return sqrt_principal(z + 1.0) * sqrt_principal(z - 1.0);
}

cplx c_inv(cplx z, Side side) { return z - two_sqrt_product(z, side); }

cplx s_of_c_inv(cplx z, Side side) { return -two_sqrt_product(z, side); }

Ellipse::Ellipse(double radius) : r(radius) {
  if (!(radius > 0.0 && radius < 1.0)) throw domain_error("Ellipse: r must lie in (0, 1)");
  cr = 0.5 * (radius + 1.0 / radius);
  sr = 0.5 * (1.0 / radius - radius);
}

double Ellipse::functional(cplx p) const {
  const double a = p.real() / cr;
  const double b = p.imag() / sr;
  return a * a + b * b;
}

cplx Ellipse::boundary(double t) const { return {cr * std::cos(t), sr * std::sin(t)}; }

bool ellipse_contains(double r, cplx p) { return Ellipse(r).contains(p); }

bool residue_condition_holds(cplx z, double r, double margin) {
  if (z == cplx(0.0)) throw domain_error("residue_condition_holds: z = 0");
  const Ellipse e(r);
  const double bound = std::abs(z) * e.cr + 1.0;
  const long n_max = static_cast<long>(std::floor(bound + 0.5));
  for (long n = -n_max - 1; n <= n_max; ++n) {
    const cplx p = iu * (static_cast<double>(n) + 0.5) / z;
    if (std::abs(e.functional(p) - 1.0) <= margin) return false;
  }
  return true;
}

std::set<long> enumerate_S(double r, cplx z) {
  if (z == cplx(0.0)) throw domain_error("enumerate_S: z = 0");
  const Ellipse e(r);
  std::set<long> out;
  const double bound = std::abs(z) * e.cr + 1.0;
  const long n_max = static_cast<long>(std::floor(bound + 0.5));
  for (long n = -n_max - 1; n <= n_max; ++n) {
    const cplx p = iu * (static_cast<double>(n) + 0.5) / z;
    if (!e.contains(p)) continue;
    // Membership is in E \ [-1, 1]; for z off iR the point p is never real.
    if (p.imag() == 0.0 && std::abs(p.real()) <= 1.0) continue;
    out.insert(n);
  }
  return out;
}

}  // namespace reslab::branch
