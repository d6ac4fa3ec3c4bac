#pragma once

#include <memory>
#include <string>
#include <vector>

#include "reslab/algebra_a2.hpp"
#include "reslab/numerics.hpp"
#include "reslab/spherical.hpp"

namespace reslab::sym {

// tanh(pi v) with a guard band of 1e-9 around the poles v in i(Z + 1/2).
// Every contour in the library is constructed to keep its nodes away from
// the poles, so proximity indicates a contour bug and raises pole_error.
cplx th_pi(cplx v, double guard = 1e-9);

// Distance from v to i(Z + 1/2).
double dist_to_half_integer_poles(cplx v);
// Distance from v to iZ.
double dist_to_integer_lattice(cplx v);

// phi_{z,u}(w) = (z c(uw) / (iw)) th(pi z c(uw)), u a sixth root of unity.
cplx phi_zu(cplx z, cplx u, cplx w);
// phi_{z,1}(v) for arbitrary nonzero v.
inline cplx phi_z1(cplx z, cplx v) { return phi_zu(z, cplx(1.0), v); }

// Pluggable model of the symmetrized spectral data
// (f x (phi_{i la(z,w)} + phi_{-i la(z,w)})/2)(y): even in z and w,
// invariant under w-rotations by sixth roots, holomorphic in z.
class SpectralSymbol {
public:
  virtual ~SpectralSymbol() = default;
  virtual cplx evaluate(cplx z, cplx w) const = 0;
  virtual std::string family() const = 0;
  // Heavy per-evaluation cost (spherical quadrature behind each call).
  virtual bool expensive() const { return false; }
};

using SymbolPtr = std::shared_ptr<const SpectralSymbol>;

// psi_z(w) = (1/2pi) S(z, w) (iw)^2.
cplx psi(const SpectralSymbol& s, cplx z, cplx w);

// Plancherel density with c0 = 1, as the product over positive roots
// lambda_a th(pi lambda_a).
cplx plancherel_density(const a2::SpectralParam& lambda, double guard = 1e-9);
// Polar form c0 z^3 prod_u c(uw) th(pi z c(uw)).
cplx plancherel_density_polar(cplx z, cplx w, double guard = 1e-9);

// Gamma_X in its Gamma-product and cosine-product forms.
cplx gamma_x_gamma_form(const a2::SpectralParam& lambda);
cplx gamma_x_cos_form(const a2::SpectralParam& lambda, double guard = 1e-9);
// T_lambda reducibility: some lambda_a in Z + 1/2.
bool gamma_x_singular(const a2::SpectralParam& lambda, double tol = 1e-9);

// log Gamma on C (principal branch), Lanczos approximation.
cplx log_gamma(cplx z);

// Monomial coefficient of e2^i e3^j in the Gaussian prefactor polynomial.
struct PrefactorTerm {
  int i = 0, j = 0;
  double coeff = 0.0;
};

// Family A: S(z, w) = P(e2, e3) exp(-(3/2) beta z^2), where e2 and e3 are the
// elementary symmetric functions of {(z c(uw))^2 : u in {1, xi, xi^2}}.
// sum_u c(uw)^2 = 3/2 identically, so the exponential is w-independent.
SymbolPtr make_gaussian_symbol(double beta, std::vector<PrefactorTerm> prefactor = {});

// Family B: S(z, w) = h(bold_i la(z,w)) (phi_{i la}(y) + phi_{-i la}(y))/2
// with h from the shipped transform family and spherical values from a
// K-quadrature of the given order.
SymbolPtr make_spherical_symbol(const sph::TransformH& h, const sph::BasePoint& y, int order = 32);

// Rescaled symbol c * S (linearity checks).
SymbolPtr scale_symbol(SymbolPtr s, cplx factor);

struct ValidationReport {
  double evenness = 0.0;     // max |S(-z,w) - S(z,w)|, |S(z,-w) - S(z,w)| rel
  double rotation = 0.0;     // max psi rotation-identity residual
  double holomorphy = 0.0;   // max Cauchy-Riemann finite-difference residual
  bool pass = false;
};

// Structural gate run before accepting a symbol: evenness and rotation
// covariance on random samples, holomorphy via Cauchy-Riemann residuals.
// Defaults admit the spherical family at its default quadrature order.
ValidationReport validate_symbol(const SpectralSymbol& s, std::uint64_t seed = 1,
                                 double tol_even = 1e-8, double tol_rot = 1e-7,
                                 double tol_holo = 1e-6);

}  // namespace reslab::sym
