#pragma once

#include <array>
#include <string>
#include <vector>

#include "reslab/numerics.hpp"

namespace reslab::a2 {

// A root of A2 in the e1,e2 coordinates of the plane model of a*.
// The scaled inner product is 12 times the Euclidean one, so <a,a> = 12
// for every root.
struct Root {
  double x, y;
  const char* name;
};

// Six roots: a12, a23, a13 and their negatives, in this order.
const std::array<Root, 6>& roots();
const std::array<Root, 3>& positive_roots();
const Root& alpha12();
const Root& alpha23();
const Root& alpha13();

// A point of the complexified dual a*_C in (x1, x2) coordinates.
struct SpectralParam {
  cplx x1{0.0}, x2{0.0};
};

inline SpectralParam rho() { return {cplx(0.5), cplx(0.86602540378443864676)}; }

// <lambda, mu> under the C-bilinear extension of the scaled inner product.
inline cplx inner(const SpectralParam& a, const SpectralParam& b) {
  return 12.0 * (a.x1 * b.x1 + a.x2 * b.x2);
}

// lambda_alpha = <lambda, alpha> / <alpha, alpha>.
cplx root_coordinate(const SpectralParam& lambda, const Root& alpha);

// Root coordinates of the three positive roots (la12, la23, la13).
std::array<cplx, 3> positive_root_coordinates(const SpectralParam& lambda);

// 2x2 orthogonal map on the (x1, x2) plane.
struct Mat2 {
  double a, b, c, d;  // [[a, b], [c, d]]
};

SpectralParam apply(const Mat2& w, const SpectralParam& lambda);

// The 6 Weyl elements, generated from the two simple reflections and
// deduplicated; identity first.
const std::vector<Mat2>& weyl_elements();

// w*lambda for each Weyl element, with multiplicity.
std::vector<SpectralParam> weyl_orbit(const SpectralParam& lambda);

// lambda(z, w): the polar parametrization of eq. between r,w and its
// C-bilinear extension in z. For |w| = 1 and z real this is z*w in the
// plane; for general nonzero w it is the holomorphic continuation
// x1 = z*(w + 1/w)/2, x2 = z*(w - 1/w)/(2i).
SpectralParam polar_param(cplx z, cplx w);

// Multiplication by the a*_C complex unit: lambda -> i*lambda.
inline SpectralParam times_bold_i(const SpectralParam& l) { return {iu * l.x1, iu * l.x2}; }
inline SpectralParam negate(const SpectralParam& l) { return {-l.x1, -l.x2}; }

// Coefficients (c1, c2, c3) with lambda(diag(h)) = c1 h1 + c2 h2 + c3 h3.
std::array<cplx, 3> eps_coefficients(const SpectralParam& lambda);

}  // namespace reslab::a2
