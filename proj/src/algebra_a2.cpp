#include "reslab/algebra_a2.hpp"

#include <cmath>
#include <mutex>

namespace reslab::a2 {

namespace {
const double kHalfSqrt3 = 0.86602540378443864676;

Mat2 reflection(const Root& alpha) {
  // s_a(x) = x - 2 (x.a / a.a) a, Euclidean coordinates (metric scale cancels).
  const double n = alpha.x * alpha.x + alpha.y * alpha.y;
  return {1.0 - 2.0 * alpha.x * alpha.x / n, -2.0 * alpha.x * alpha.y / n,
          -2.0 * alpha.x * alpha.y / n, 1.0 - 2.0 * alpha.y * alpha.y / n};
}

Mat2 mul(const Mat2& p, const Mat2& q) {
  return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d,
          p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d};
}

bool same(const Mat2& p, const Mat2& q) {
  return std::abs(p.a - q.a) + std::abs(p.b - q.b) + std::abs(p.c - q.c) + std::abs(p.d - q.d) <
         1e-12;
}
}  // namespace

const std::array<Root, 6>& roots() {
  static const std::array<Root, 6> r = {{{1.0, 0.0, "a12"},
                                         {-0.5, kHalfSqrt3, "a23"},
                                         {0.5, kHalfSqrt3, "a13"},
                                         {-1.0, 0.0, "-a12"},
                                         {0.5, -kHalfSqrt3, "-a23"},
                                         {-0.5, -kHalfSqrt3, "-a13"}}};
  return r;
}

const std::array<Root, 3>& positive_roots() {
  static const std::array<Root, 3> r = {{roots()[0], roots()[1], roots()[2]}};
  return r;
}

const Root& alpha12() { return roots()[0]; }
const Root& alpha23() { return roots()[1]; }
const Root& alpha13() { return roots()[2]; }

cplx root_coordinate(const SpectralParam& lambda, const Root& alpha) {
  // <l, a>/<a, a> = (x . a) since <a, a> = 12 and <,> = 12 * Euclidean.
  return lambda.x1 * alpha.x + lambda.x2 * alpha.y;
}

std::array<cplx, 3> positive_root_coordinates(const SpectralParam& lambda) {
  return {root_coordinate(lambda, alpha12()), root_coordinate(lambda, alpha23()),
          root_coordinate(lambda, alpha13())};
}

SpectralParam apply(const Mat2& w, const SpectralParam& l) {
  return {w.a * l.x1 + w.b * l.x2, w.c * l.x1 + w.d * l.x2};
}

const std::vector<Mat2>& weyl_elements() {
  static std::vector<Mat2> elements;
  static std::once_flag flag;
  std::call_once(flag, [] {
    const Mat2 id{1.0, 0.0, 0.0, 1.0};
    const Mat2 s1 = reflection(alpha12());
    const Mat2 s2 = reflection(alpha23());
    elements.push_back(id);
    bool grew = true;
    while (grew) {
      grew = false;
      const auto snapshot = elements;
      for (const Mat2& w : snapshot) {
        for (const Mat2* s : {&s1, &s2}) {
          const Mat2 p = mul(*s, w);
          bool known = false;
          for (const Mat2& q : elements)
            if (same(p, q)) {
              known = true;
              break;
            }
          if (!known) {
            elements.push_back(p);
            grew = true;
          }
        }
      }
    }
    if (elements.size() != weyl_order)
      throw std::logic_error("Weyl group closure did not yield 6 elements");
  });
  return elements;
}

std::vector<SpectralParam> weyl_orbit(const SpectralParam& lambda) {
  std::vector<SpectralParam> orbit;
  orbit.reserve(weyl_order);
  for (const Mat2& w : weyl_elements()) orbit.push_back(apply(w, lambda));
  return orbit;
}

SpectralParam polar_param(cplx z, cplx w) {
  if (w == cplx(0.0)) throw domain_error("polar_param: w must be nonzero");
  const cplx cw = 0.5 * (w + 1.0 / w);
  const cplx sw = 0.5 * (w - 1.0 / w);
  return {z * cw, -iu * z * sw};
}

std::array<cplx, 3> eps_coefficients(const SpectralParam& l) {
  const double inv_sqrt3 = 0.57735026918962576451;
  return {l.x1 + l.x2 * inv_sqrt3, -l.x1 + l.x2 * inv_sqrt3, -2.0 * l.x2 * inv_sqrt3};
}

}  // namespace reslab::a2
