#include "reslab/spherical.hpp"

#include <algorithm>
#include <cmath>

namespace reslab::sph {

BasePoint BasePoint::from_two(double a, double b) {
  std::array<double, 3> h = {a, b, -a - b};
  std::sort(h.begin(), h.end(), std::greater<double>());
  return {h[0], h[1], h[2]};
}

IwasawaLog iwasawa_log(const Mat3& g) {
  const double det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                     g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                     g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  if (std::abs(det - 1.0) > 1e-10) throw domain_error("iwasawa_log: det g != 1");

  // Modified Gram-Schmidt on columns; R has positive diagonal.
  std::array<std::array<double, 3>, 3> q{};  // q[j] = j-th orthonormal column
  double r_diag[3];
  for (int j = 0; j < 3; ++j) {
    std::array<double, 3> v = {g[0][j], g[1][j], g[2][j]};
    for (int k = 0; k < j; ++k) {
      const double proj = v[0] * q[k][0] + v[1] * q[k][1] + v[2] * q[k][2];
      for (int i = 0; i < 3; ++i) v[i] -= proj * q[k][i];
    }
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (norm < 1e-12) throw domain_error("iwasawa_log: near-singular pivot");
    r_diag[j] = norm;
    for (int i = 0; i < 3; ++i) q[j][i] = v[i] / norm;
  }
  return {std::log(r_diag[0]), std::log(r_diag[1]), std::log(r_diag[2])};
}

double iwasawa_reconstruction_error(const Mat3& g) {
  // Recompute the full factorization and compare k * a * n with g.
  std::array<std::array<double, 3>, 3> q{};
  double r[3][3] = {};
  for (int j = 0; j < 3; ++j) {
    std::array<double, 3> v = {g[0][j], g[1][j], g[2][j]};
    for (int k = 0; k < j; ++k) {
      const double proj = v[0] * q[k][0] + v[1] * q[k][1] + v[2] * q[k][2];
      r[k][j] = proj;
      for (int i = 0; i < 3; ++i) v[i] -= proj * q[k][i];
    }
    r[j][j] = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (int i = 0; i < 3; ++i) q[j][i] = v[i] / r[j][j];
  }
  double err = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k <= j; ++k) s += q[k][i] * r[k][j];
      err = std::max(err, std::abs(s - g[i][j]));
    }
  return err;
}

Mat3 euler_zyz(double alpha, double beta, double gamma) {
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double cg = std::cos(gamma), sg = std::sin(gamma);
  // Rz(alpha) * Ry(beta) * Rz(gamma)
  return {{{ca * cb * cg - sa * sg, -ca * cb * sg - sa * cg, ca * sb},
           {sa * cb * cg + ca * sg, -sa * cb * sg + ca * cg, sa * sb},
           {-sb * cg, sb * sg, cb}}};
}

SphericalEvaluator::SphericalEvaluator(const BasePoint& y, int order) : y_(y), order_(order) {
  if (order < 2) throw domain_error("SphericalEvaluator: order too small");
  const GaussLegendre& gl = gauss_legendre(order);
  nodes_.resize(static_cast<std::size_t>(order) * order * order);

  // phi_lambda(exp H0) = Int_K exp((lambda - rho)(H(exp(-H0) k))) dk with H
  // the Iwasawa a-projection of G = KAN. Euler ZYZ angles: alpha, gamma in
  // [0, 2pi), beta in [0, pi] with sin(beta) weight.
  const double eh[3] = {std::exp(-y.h1), std::exp(-y.h2), std::exp(-y.h3)};
  parallel_for(static_cast<std::size_t>(order), [&](std::size_t ia) {
    const double alpha = pi * (gl.nodes[ia] + 1.0);
    const double wa = pi * gl.weights[ia];
    for (int ib = 0; ib < order_; ++ib) {
      const double beta = 0.5 * pi * (gl.nodes[ib] + 1.0);
      const double wb = 0.5 * pi * gl.weights[ib] * std::sin(beta);
      for (int ic = 0; ic < order_; ++ic) {
        const double gamma = pi * (gl.nodes[ic] + 1.0);
        const double wc = pi * gl.weights[ic];
        Mat3 m = euler_zyz(alpha, beta, gamma);
        for (int col = 0; col < 3; ++col)
          for (int row = 0; row < 3; ++row) m[row][col] *= eh[row];
        const IwasawaLog t = iwasawa_log(m);
        Node& n = nodes_[(ia * order_ + ib) * order_ + ic];
        n.a = t.t1 - t.t2;
        n.b = (t.t1 + t.t2 - 2.0 * t.t3) * 0.57735026918962576451;
        // -rho(H) = -(t1 - t3), folded into the exponent.
        n.c = -(t.t1 - t.t3);
        n.weight = wa * wb * wc / (8.0 * pi * pi);
      }
    }
  });
}

cplx SphericalEvaluator::phi(const a2::SpectralParam& lambda) const {
  const cplx x1 = lambda.x1, x2 = lambda.x2;
  cplx sum = 0.0;
  for (const Node& n : nodes_) sum += n.weight * std::exp(x1 * n.a + x2 * n.b + n.c);
  return sum;
}

cplx SphericalEvaluator::phi_bold_i_pair_avg(const a2::SpectralParam& lambda) const {
  const cplx x1 = iu * lambda.x1, x2 = iu * lambda.x2;
  cplx sum = 0.0;
  for (const Node& n : nodes_) {
    const cplx e = std::exp(x1 * n.a + x2 * n.b);
    sum += n.weight * std::exp(n.c) * 0.5 * (e + 1.0 / e);
  }
  return sum;
}

cplx spherical_phi(const a2::SpectralParam& lambda, const BasePoint& y, int order) {
  return SphericalEvaluator(y, order).phi(lambda);
}

cplx TransformH::operator()(const a2::SpectralParam& mu) const {
  return scale * std::exp(beta * a2::inner(mu, mu) / 8.0);
}

cplx conv_value(const TransformH& h, const a2::SpectralParam& lambda, const BasePoint& y,
                int order) {
  return h(lambda) * spherical_phi(lambda, y, order);
}

}  // namespace reslab::sph
