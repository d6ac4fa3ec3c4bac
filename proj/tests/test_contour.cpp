#include <cmath>

#include "doctest.h"
#include "reslab/contour.hpp"

using namespace reslab;
using namespace reslab::contour;
using reslab::sym::SymbolPtr;

namespace {
SymbolPtr gsym() {
  return sym::make_gaussian_symbol(0.4, {{0, 0, 1.0}, {1, 0, 0.25}, {0, 1, -0.1}});
}
}  // namespace

TEST_SUITE_BEGIN("contour");

TEST_CASE("F basics: zero, evenness, flatness") {
  const auto s = gsym();
  CHECK(std::abs(F_unit(*s, 0.0)) == 0.0);

  const cplx z(0.8, 0.1);
  CHECK(rel_diff(F_unit(*s, -z), F_unit(*s, z)) < 1e-11);

  // |F(z)/z^6| stable within 10x between |z| = 1e-2 and 1e-3.
  const cplx z1(1e-2, 0.0), z2(1e-3, 0.0);
  const double r1 = std::abs(F_unit(*s, z1) / std::pow(z1, 6.0));
  const double r2 = std::abs(F_unit(*s, z2) / std::pow(z2, 6.0));
  CHECK(r1 / r2 < 10.0);
  CHECK(r2 / r1 < 10.0);

  CHECK_THROWS_AS(F_unit(*s, iu * 0.75), domain_error);
}

TEST_CASE("F_r holomorphy and radii agreement") {
  const auto s = gsym();
  CHECK(std::abs(F_r(*s, 0.0, 0.5)) == 0.0);

  // Cauchy-Riemann residual of z -> F_r(z) by finite differences.
  const cplx z(0.85, -0.35);
  const double r = branch::r_of_c(1.2);
  const double h = 1e-5;
  const cplx dre = (F_r(*s, z + h, r) - F_r(*s, z - h, r)) / (2.0 * h);
  const cplx dim = (F_r(*s, z + h * iu, r) - F_r(*s, z - h * iu, r)) / (2.0 * h);
  CHECK(std::abs(dim - iu * dre) < 1e-6 * std::max(1.0, std::abs(dre)));

  // Two radii agree after the 2 pi i (G_r - G_r') correction.
  const double r2 = branch::r_of_c(1.45);
  const cplx lhs = F_r(*s, z, r) + 2.0 * pi * iu * G_r(*s, z, r);
  const cplx rhs = F_r(*s, z, r2) + 2.0 * pi * iu * G_r(*s, z, r2);
  CHECK(rel_diff(lhs, rhs) < 1e-9);

  CHECK_THROWS_AS(F_r(*s, cplx(0.0, -0.5 / 1.2), branch::r_of_c(1.2)), domain_error);
}

TEST_CASE("G_n symmetries") {
  const auto s = gsym();
  Rng rng(3);
  for (int k = 0; k < 12; ++k) {
    const cplx z = rng.annulus(0.4, 2.2);
    if (std::abs(z.real()) < 0.05) continue;
    for (long n : {0L, 1L, 2L}) {
      CHECK(rel_diff(G_n(*s, n, z), G_n(*s, -n - 1, z)) < 1e-11);
      CHECK(rel_diff(G_n(*s, n, -z), G_n(*s, n, z)) < 1e-11);
    }
  }
  CHECK_THROWS_AS(G_n(*s, 0, iu * 0.9), domain_error);
}

TEST_CASE("single residue oracle") {
  // 2 pi i Res_{w0} prod_u phi_{z,u} equals the contour integral around w0,
  // with w0 = (1/u) c_inv((i/z)(n0 + 1/2)).
  const auto s = gsym();
  const cplx z(0.8, -0.55);
  const long n0 = 0;
  const cplx x = iu * (n0 + 0.5) / z;
  REQUIRE(branch::Ellipse(branch::r_of_c(1.3)).contains(x));

  for (const cplx u : {cplx(1.0), xi, xi * xi}) {
    const cplx w0 = branch::c_inv(x) / u;
    // quadrature of prod_u' phi over a small circle around w0
    const double rad = 0.004;
    const cplx numeric = integrate_periodic_fixed(
        [&](double t) {
          const cplx w = w0 + std::polar(rad, t);
          cplx p = 1.0;
          for (const cplx up : {cplx(1.0), xi, xi * xi}) p *= sym::phi_zu(z, up, w);
          return p * iu * std::polar(rad, t);
        },
        256);
    cplx others = 1.0;
    for (const cplx up : {cplx(1.0), xi, xi * xi})
      if (std::abs(up - u) > 1e-12) others *= sym::phi_zu(z, up, w0);
    const cplx predicted =
        2.0 * pi * iu * others * x / (iu * pi * branch::s_of_c_inv(x));
    CHECK(rel_diff(numeric, predicted) < 1e-8);
  }
}

TEST_CASE("decomposition identity") {
  const auto s = gsym();

  // z = 0.9 e^{-i pi/6}, c(r) = 1.2
  {
    const auto rep = check_decomposition(*s, 0.9 * std::polar(1.0, -pi / 6.0),
                                         branch::r_of_c(1.2));
    CHECK(rep.pass);
    CHECK(rep.rel_residual < 1e-8);
  }

  // real z: S has only the paired entries n, -n-1
  {
    const auto rep = check_decomposition(*s, cplx(1.1, 0.0), branch::r_of_c(1.25));
    CHECK(rep.pass);
    const auto S = branch::enumerate_S(branch::r_of_c(1.25), cplx(1.1, 0.0));
    for (long n : S) CHECK(S.count(-n - 1) == 1);
  }

  // z = 0: both sides zero
  {
    const auto rep = check_decomposition(*s, 0.0, 0.5);
    CHECK(rep.abs_residual == 0.0);
  }

  // admissible grid
  Rng rng(17);
  int tested = 0;
  while (tested < 8) {
    const cplx z = rng.annulus(0.35, 1.9);
    if (std::abs(z.real()) < 0.08) continue;
    const double r = branch::r_of_c(rng.uniform(1.1, 1.6));
    if (!branch::residue_condition_holds(z, r, 1e-3)) continue;
    const auto rep = check_decomposition(*s, z, r);
    CHECK(rep.pass);
    ++tested;
  }
}

TEST_CASE("S_{r,z} local constancy on a connected neighborhood") {
  const double r = branch::r_of_c(1.18);
  const cplx center(0.0, -0.8);
  REQUIRE(branch::residue_condition_holds(center, r, 1e-3));
  const auto S0 = branch::enumerate_S(r, center + cplx(0.03, 0.0));
  Rng rng(31);
  for (int k = 0; k < 50; ++k) {
    cplx z = center + 0.06 * rng.unit_circle() * rng.uniform();
    if (z.real() == 0.0) z += cplx(1e-6, 0.0);
    CHECK(branch::enumerate_S(r, z) == S0);
  }
}

TEST_CASE("resolvent upper and below") {
  const auto s = gsym();
  const Resolvent R(s);

  // overlap on Q = {Re z' > x0, 0 <= Im z' < y0}
  for (const cplx zs : {cplx(0.8, 0.05), cplx(1.3, 0.02), cplx(0.5, 0.08)}) {
    const cplx a = R.upper(rho_x * zs);
    const cplx b = R.below(rho_x * zs);
    CHECK(rel_diff(a, b) < 1e-7);
  }

  // continuity from below across the positive reals
  {
    const cplx z0 = rho_x * cplx(0.9, 0.0);
    const cplx up = R.below(z0 + iu * 1e-6 * rho_x);
    const cplx dn = R.below(z0 - iu * 1e-6 * rho_x);
    CHECK(std::abs(up - dn) < 1e-4 * std::abs(up));
  }

  // |R| decreases along vertical rays in the upper half plane
  {
    const cplx z1 = rho_x * cplx(0.4, 0.3);
    const cplx z2 = rho_x * cplx(0.4, 0.9);
    CHECK(std::abs(R.upper(z2)) < std::abs(R.upper(z1)));
  }

  // conjugation: R(-conj z) = conj R(z) for symbols real on the real axis
  {
    const cplx z = rho_x * cplx(0.35, 0.55);
    CHECK(std::abs(R.upper(-std::conj(z)) - std::conj(R.upper(z))) <
          1e-9 * std::abs(R.upper(z)));
  }
}

TEST_CASE("logarithmic cover jump") {
  const auto s = gsym();
  const Resolvent R(s);
  for (const cplx zs :
       {cplx(0.45, -0.3), cplx(0.3, -0.42), cplx(-0.5, -0.25), cplx(0.8, -0.1)}) {
    CHECK(R.log_jump_residual(rho_x * zs) < 1e-6);
  }
}

TEST_SUITE_END();
