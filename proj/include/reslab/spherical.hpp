#pragma once

#include <array>
#include <memory>
#include <vector>

#include "reslab/algebra_a2.hpp"
#include "reslab/numerics.hpp"

namespace reslab::sph {

// y = exp(diag(h1, h2, h3)) . o with h1 + h2 + h3 = 0, stored sorted
// descending (every K-orbit meets this set).
struct BasePoint {
  double h1 = 0.0, h2 = 0.0, h3 = 0.0;
  static BasePoint from_two(double a, double b);  // h3 = -a - b, then canonicalize
  bool is_origin() const { return h1 == 0.0 && h2 == 0.0 && h3 == 0.0; }
};

// log of the A-part of the Iwasawa decomposition g = k a n.
struct IwasawaLog {
  double t1, t2, t3;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

// Gram-Schmidt on the columns of g: g = Q R with R upper triangular and
// positive diagonal, so t_j = log R_jj. Requires det g = 1 (within 1e-10).
IwasawaLog iwasawa_log(const Mat3& g);

// Reconstruction error |k a n - g|_max for the decomposition of g.
double iwasawa_reconstruction_error(const Mat3& g);

Mat3 euler_zyz(double alpha, double beta, double gamma);

// Harish-Chandra spherical function at complex spectral parameter, via the
// K-integral with Gauss-Legendre nodes in each ZYZ Euler angle. The Iwasawa
// projections of y * k at the nodes depend only on y and are precomputed.
class SphericalEvaluator {
public:
  SphericalEvaluator(const BasePoint& y, int order);

  // phi_lambda(y); normalized so phi(o) = 1.
  cplx phi(const a2::SpectralParam& lambda) const;

  // (phi_{i*lambda}(y) + phi_{-i*lambda}(y)) / 2 as one pass over the nodes.
  cplx phi_bold_i_pair_avg(const a2::SpectralParam& lambda) const;

  const BasePoint& point() const { return y_; }
  int order() const { return order_; }

private:
  BasePoint y_;
  int order_;
  // Per node: exponent coefficients so that (lambda + rho)(H(y k)) =
  // x1 * A + x2 * B + C, plus the Haar weight.
  struct Node {
    double a, b, c, weight;
  };
  std::vector<Node> nodes_;
};

cplx spherical_phi(const a2::SpectralParam& lambda, const BasePoint& y, int order = 32);

// Shipped entire W-invariant transform family: h(mu) = scale * exp(beta <mu,mu> / 8).
// On the spectral arguments mu = bold_i * lambda(z, w) this is the Gaussian
// exp(-(3/2) beta z^2).
struct TransformH {
  double beta = 0.4;
  double scale = 1.0;
  cplx operator()(const a2::SpectralParam& mu) const;
};

// h(lambda) * phi_lambda(y): the model of (f x phi_lambda)(y) for K-invariant
// f with spherical transform h.
cplx conv_value(const TransformH& h, const a2::SpectralParam& lambda, const BasePoint& y,
                int order = 32);

}  // namespace reslab::sph
