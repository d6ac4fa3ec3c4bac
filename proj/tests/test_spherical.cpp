#include <cmath>

#include "doctest.h"
#include "reslab/spherical.hpp"

using namespace reslab;
using namespace reslab::sph;
using reslab::a2::SpectralParam;

namespace {

Mat3 random_sl3(Rng& rng) {
  // Random 3x3 with positive determinant, scaled to det 1.
  for (;;) {
    Mat3 g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g[i][j] = rng.uniform(-1.0, 1.0) + (i == j ? 1.5 : 0.0);
    const double det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                       g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                       g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    if (det < 0.1) continue;
    const double s = std::cbrt(det);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g[i][j] /= s;
    return g;
  }
}

// Independent integration over SO(3) in axis-angle form:
// Int_SO(3) f = (1/pi) Int_0^pi (1 - cos t) [ (1/4pi) Int_{S^2} f(R(n, t)) dn ] dt,
// with a product Gauss-Legendre grid on the sphere and in the angle.
cplx phi_axis_angle(const SpectralParam& la, const BasePoint& y, int nt, int ns) {
  const GaussLegendre& glt = gauss_legendre(nt);
  const GaussLegendre& gls = gauss_legendre(ns);
  const double eh[3] = {std::exp(-y.h1), std::exp(-y.h2), std::exp(-y.h3)};
  const auto coeff = a2::eps_coefficients(la);
  cplx sum = 0.0;
  double wsum = 0.0;
  for (int it = 0; it < nt; ++it) {
    const double t = 0.5 * pi * (glt.nodes[it] + 1.0);
    const double wt = 0.5 * pi * glt.weights[it] * (1.0 - std::cos(t)) / pi;
    const double ct = std::cos(t), st = std::sin(t);
    for (int iv = 0; iv < ns; ++iv) {
      const double cu = gls.nodes[iv];  // cos(polar angle of the axis)
      const double su = std::sqrt(1.0 - cu * cu);
      for (int ip = 0; ip < 2 * ns; ++ip) {
        const double ph = pi * (ip + 0.5) / ns;
        const double n[3] = {su * std::cos(ph), su * std::sin(ph), cu};
        const double wgt = wt * gls.weights[iv] * (pi / ns) / (4.0 * pi);
        // Rodrigues rotation for axis n, angle t.
        Mat3 k;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) k[i][j] = ct * (i == j) + (1.0 - ct) * n[i] * n[j];
        k[0][1] -= st * n[2];
        k[0][2] += st * n[1];
        k[1][0] += st * n[2];
        k[1][2] -= st * n[0];
        k[2][0] -= st * n[1];
        k[2][1] += st * n[0];
        Mat3 m;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) m[i][j] = eh[i] * k[i][j];
        const IwasawaLog h = iwasawa_log(m);
        sum += wgt *
               std::exp(coeff[0] * h.t1 + coeff[1] * h.t2 + coeff[2] * h.t3 - (h.t1 - h.t3));
        wsum += wgt;
      }
    }
  }
  return sum / wsum;  // wsum = 1 up to quadrature error
}

}  // namespace

TEST_SUITE_BEGIN("spherical");

TEST_CASE("base point canonical form") {
  const BasePoint y = BasePoint::from_two(-0.3, 0.4);
  CHECK(y.h1 == doctest::Approx(0.4));
  CHECK(y.h2 == doctest::Approx(-0.1));
  CHECK(y.h3 == doctest::Approx(-0.3));
  CHECK(std::abs(y.h1 + y.h2 + y.h3) < 1e-15);
}

TEST_CASE("iwasawa_log") {
  const Mat3 id = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const IwasawaLog t0 = iwasawa_log(id);
  CHECK(std::abs(t0.t1) + std::abs(t0.t2) + std::abs(t0.t3) < 1e-14);

  const Mat3 d = {{{std::exp(0.7), 0, 0}, {0, std::exp(-0.2), 0}, {0, 0, std::exp(-0.5)}}};
  const IwasawaLog td = iwasawa_log(d);
  CHECK(std::abs(td.t1 - 0.7) < 1e-12);
  CHECK(std::abs(td.t2 + 0.2) < 1e-12);
  CHECK(std::abs(td.t3 + 0.5) < 1e-12);

  Rng rng(13);
  for (int k = 0; k < 50; ++k) {
    const Mat3 g = random_sl3(rng);
    CHECK(iwasawa_reconstruction_error(g) < 1e-10);
    const IwasawaLog t = iwasawa_log(g);
    CHECK(std::abs(t.t1 + t.t2 + t.t3) < 1e-12);
  }

  Mat3 bad = id;
  bad[0][0] = 2.0;
  CHECK_THROWS_AS(iwasawa_log(bad), domain_error);
}

TEST_CASE("phi at the origin is 1") {
  const SphericalEvaluator at_o(BasePoint{}, 16);
  Rng rng(7);
  for (int k = 0; k < 10; ++k) {
    const SpectralParam la{rng.box(-2, 2, -1, 1), rng.box(-2, 2, -1, 1)};
    CHECK(std::abs(at_o.phi(la) - 1.0) < 1e-10);
  }
}

TEST_CASE("weyl invariance and conjugation") {
  const BasePoint y = BasePoint::from_two(0.4, -0.1);
  const SphericalEvaluator ev(y, 48);
  const SpectralParam la{0.9, 0.37};
  const cplx base = ev.phi(la);
  for (const auto& wl : a2::weyl_orbit(la)) CHECK(rel_diff(ev.phi(wl), base) < 1e-8);

  const SpectralParam lc{cplx(0.6, 0.2), cplx(-0.3, 0.5)};
  const SpectralParam lc_bar{std::conj(lc.x1), std::conj(lc.x2)};
  CHECK(std::abs(ev.phi(lc_bar) - std::conj(ev.phi(lc))) < 1e-10);
}

TEST_CASE("quadrature convergence and node domination") {
  const BasePoint y = BasePoint::from_two(0.4, -0.1);
  const SphericalEvaluator e48(y, 48), e96(y, 96);
  const SpectralParam la{1.1, -0.6};
  CHECK(std::abs(e48.phi(la) - e96.phi(la)) < 1e-9);

  // |phi_lambda| <= phi at the real part of the parameter (same nodes).
  Rng rng(23);
  for (int k = 0; k < 10; ++k) {
    const SpectralParam lc{rng.box(-1.5, 1.5, -1.5, 1.5), rng.box(-1.5, 1.5, -1.5, 1.5)};
    const SpectralParam re_part{lc.x1.real(), lc.x2.real()};
    CHECK(std::abs(e48.phi(lc)) <= e48.phi(re_part).real() * (1.0 + 1e-14));
  }
}

TEST_CASE("positivity on the rho line and independent oracle") {
  const BasePoint y = BasePoint::from_two(0.4, -0.1);
  const SphericalEvaluator ev(y, 48);
  for (int n = 0; n < 3; ++n) {
    const double c = n + 0.5;
    const SpectralParam la{c * 0.5, c * 0.86602540378443864676};  // (n + 1/2) rho
    const cplx v = ev.phi(la);
    CHECK(v.real() > 0.0);
    CHECK(std::abs(v.imag()) < 1e-12);
    const cplx w = phi_axis_angle(la, y, 48, 24);
    CHECK(rel_diff(v, w) < 1e-6);
  }

  // Plain Monte-Carlo sanity at 3 sigma.
  Rng rng(101);
  const SpectralParam la{1.5 * 0.5, 1.5 * 0.86602540378443864676};
  const auto coeff = a2::eps_coefficients(la);
  const double eh[3] = {std::exp(-y.h1), std::exp(-y.h2), std::exp(-y.h3)};
  double mean = 0.0, m2 = 0.0;
  const int nsamp = 200000;
  for (int k = 1; k <= nsamp; ++k) {
    double q[4], norm = 0.0;
    for (double& qi : q) {
      const double u1 = rng.uniform(), u2 = rng.uniform();
      qi = std::sqrt(-2.0 * std::log(u1 + 1e-300)) * std::cos(2.0 * pi * u2);
      norm += qi * qi;
    }
    norm = std::sqrt(norm);
    for (double& qi : q) qi /= norm;
    const double a = q[0], b = q[1], c2 = q[2], d = q[3];
    const Mat3 k3 = {{{a * a + b * b - c2 * c2 - d * d, 2 * (b * c2 - a * d), 2 * (b * d + a * c2)},
                      {2 * (b * c2 + a * d), a * a - b * b + c2 * c2 - d * d, 2 * (c2 * d - a * b)},
                      {2 * (b * d - a * c2), 2 * (c2 * d + a * b),
                       a * a - b * b - c2 * c2 + d * d}}};
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = eh[i] * k3[i][j];
    const IwasawaLog t = iwasawa_log(m);
    const double val =
        std::exp((coeff[0] * t.t1 + coeff[1] * t.t2 + coeff[2] * t.t3).real() - (t.t1 - t.t3));
    const double delta = val - mean;
    mean += delta / k;
    m2 += delta * (val - mean);
  }
  const double sigma = std::sqrt(m2 / (nsamp - 1.0) / nsamp);
  const double ref = ev.phi(la).real();
  CHECK(std::abs(mean - ref) < 3.0 * sigma + 1e-12);
}

TEST_CASE("conv_value") {
  const TransformH h{0.35, 1.0};
  CHECK(rel_diff(conv_value(h, SpectralParam{}, BasePoint{}, 16), cplx(1.0)) < 1e-12);

  const SpectralParam la{0.75, 0.1};
  const cplx expect = h(la);  // phi(o) = 1
  CHECK(rel_diff(conv_value(h, la, BasePoint{}, 16), expect) < 1e-10);
}

TEST_SUITE_END();
