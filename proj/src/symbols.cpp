#include "reslab/symbols.hpp"

#include <cmath>

#include "reslab/branchkit.hpp"

namespace reslab::sym {

double dist_to_half_integer_poles(cplx v) {
  const double k = std::round(v.imag() - 0.5) + 0.5;
  return std::hypot(v.real(), v.imag() - k);
}

double dist_to_integer_lattice(cplx v) {
  const double k = std::round(v.imag());
  return std::hypot(v.real(), v.imag() - k);
}

cplx th_pi(cplx v, double guard) {
  if (dist_to_half_integer_poles(v) < guard)
    throw pole_error("th(pi v): argument inside the pole guard band", v);
  const cplx a = pi * v;
  if (std::abs(a.real()) > 18.0) {
    // (1 - e^{-2|a|...})/(1 + ...) form: stable where tanh saturates.
    const double sign = a.real() > 0.0 ? 1.0 : -1.0;
    const cplx e = std::exp(-2.0 * sign * a);
    return sign * (1.0 - e) / (1.0 + e);
  }
  return std::tanh(a);
}

cplx phi_zu(cplx z, cplx u, cplx w) {
  if (w == cplx(0.0)) throw domain_error("phi_zu: w = 0");
  const cplx cuw = branch::c(u * w);
  return z * cuw / (iu * w) * th_pi(z * cuw);
}

cplx psi(const SpectralSymbol& s, cplx z, cplx w) {
  const cplx iw = iu * w;
  return s.evaluate(z, w) * iw * iw / (2.0 * pi);
}

cplx plancherel_density(const a2::SpectralParam& lambda, double guard) {
  cplx p = 1.0;
  for (const cplx la : a2::positive_root_coordinates(lambda)) p *= la * th_pi(la, guard);
  return p;
}

cplx plancherel_density_polar(cplx z, cplx w, double guard) {
  cplx p = z * z * z;
  for (const cplx u : {cplx(1.0), xi, xi * xi}) {
    const cplx cuw = branch::c(u * w);
    p *= cuw * th_pi(z * cuw, guard);
  }
  return p;
}

cplx log_gamma(cplx z) {
  // Lanczos, g = 7, n = 9.
  static const double coef[9] = {0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
                                 771.32342877765313,   -176.61502916214059, 12.507343278686905,
                                 -0.13857109526572012, 9.9843695780195716e-6,
                                 1.5056327351493116e-7};
  if (z.real() < 0.5) {
    // Reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
    return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  const cplx zz = z - 1.0;
  cplx x = coef[0];
  for (int k = 1; k < 9; ++k) x += coef[k] / (zz + static_cast<double>(k));
  const cplx t = zz + 7.5;
  return 0.5 * std::log(2.0 * pi) + (zz + 0.5) * std::log(t) - t + std::log(x);
}

bool gamma_x_singular(const a2::SpectralParam& lambda, double tol) {
  for (const cplx la : a2::positive_root_coordinates(lambda)) {
    const double k = std::round(la.real() - 0.5) + 0.5;
    if (std::hypot(la.real() - k, la.imag()) < tol) return true;
  }
  return false;
}

cplx gamma_x_gamma_form(const a2::SpectralParam& lambda) {
  if (gamma_x_singular(lambda)) throw pole_error("gamma_x: lambda_a in Z + 1/2", lambda.x1);
  cplx lg = 0.0;
  for (const a2::Root& alpha : a2::roots()) {
    const cplx la = a2::root_coordinate(lambda, alpha);
    lg += log_gamma(0.75 + 0.5 * la) + log_gamma(0.25 + 0.5 * la);
  }
  return std::exp(lg);
}

cplx gamma_x_cos_form(const a2::SpectralParam& lambda, double guard) {
  cplx p = 1.0;
  for (const cplx la : a2::positive_root_coordinates(lambda)) {
    const cplx c = std::cos(pi * la);
    const double k = std::round(la.real() - 0.5) + 0.5;
    if (std::hypot(la.real() - k, la.imag()) < guard)
      throw pole_error("gamma_x: cos(pi lambda_a) = 0", la);
    p *= 2.0 * pi * pi / c;
  }
  return p;
}

namespace {

class GaussianSymbol final : public SpectralSymbol {
public:
  GaussianSymbol(double beta, std::vector<PrefactorTerm> pf) : beta_(beta), pf_(std::move(pf)) {}

  cplx evaluate(cplx z, cplx w) const override {
    cplx p = 1.0;
    if (!pf_.empty()) {
      cplx t[3];
      int k = 0;
      for (const cplx u : {cplx(1.0), xi, xi * xi}) {
        const cplx a = z * branch::c(u * w);
        t[k++] = a * a;
      }
      const cplx e2 = t[0] * t[1] + t[0] * t[2] + t[1] * t[2];
      const cplx e3 = t[0] * t[1] * t[2];
      p = 0.0;
      for (const PrefactorTerm& m : pf_)
        p += m.coeff * std::pow(e2, m.i) * std::pow(e3, m.j);
    }
    return p * std::exp(-1.5 * beta_ * z * z);
  }

  std::string family() const override { return "gaussian"; }

private:
  double beta_;
  std::vector<PrefactorTerm> pf_;
};

class SphericalSymbol final : public SpectralSymbol {
public:
  SphericalSymbol(const sph::TransformH& h, const sph::BasePoint& y, int order)
      : h_(h), eval_(std::make_shared<sph::SphericalEvaluator>(y, order)) {}

  cplx evaluate(cplx z, cplx w) const override {
    const a2::SpectralParam la = a2::polar_param(z, w);
    return h_(a2::times_bold_i(la)) * eval_->phi_bold_i_pair_avg(la);
  }

  std::string family() const override { return "spherical"; }
  bool expensive() const override { return true; }

private:
  sph::TransformH h_;
  std::shared_ptr<sph::SphericalEvaluator> eval_;
};

class ScaledSymbol final : public SpectralSymbol {
public:
  ScaledSymbol(SymbolPtr base, cplx factor) : base_(std::move(base)), factor_(factor) {}
  cplx evaluate(cplx z, cplx w) const override { return factor_ * base_->evaluate(z, w); }
  std::string family() const override { return base_->family(); }
  bool expensive() const override { return base_->expensive(); }

private:
  SymbolPtr base_;
  cplx factor_;
};

}  // namespace

SymbolPtr make_gaussian_symbol(double beta, std::vector<PrefactorTerm> prefactor) {
  if (!(beta > 0.0)) throw domain_error("make_gaussian_symbol: beta must be positive");
  return std::make_shared<GaussianSymbol>(beta, std::move(prefactor));
}

SymbolPtr make_spherical_symbol(const sph::TransformH& h, const sph::BasePoint& y, int order) {
  return std::make_shared<SphericalSymbol>(h, y, order);
}

SymbolPtr scale_symbol(SymbolPtr s, cplx factor) {
  return std::make_shared<ScaledSymbol>(std::move(s), factor);
}

ValidationReport validate_symbol(const SpectralSymbol& s, std::uint64_t seed, double tol_even,
                                 double tol_rot, double tol_holo) {
  Rng rng(seed);
  ValidationReport rep;
  const int samples = s.expensive() ? 8 : 40;
  for (int k = 0; k < samples; ++k) {
    const cplx z = rng.box(-1.0, 1.0, -0.4, 0.4);
    const cplx w = rng.annulus(0.7, 1.3);
    const cplx v = s.evaluate(z, w);
    const double scale = std::max(1.0, std::abs(v));
    rep.evenness = std::max(rep.evenness, std::abs(s.evaluate(-z, w) - v) / scale);
    rep.evenness = std::max(rep.evenness, std::abs(s.evaluate(z, -w) - v) / scale);
    for (const cplx u : {xi, xi * xi}) {
      const cplx lhs = psi(s, z, w / u);
      const cplx rhs = psi(s, z, w) / (u * u);
      rep.rotation = std::max(rep.rotation, rel_diff(lhs, rhs));
    }
    // Cauchy-Riemann residual of z -> S(z, w): d/dy S = i d/dx S.
    const double h = 1e-5;
    const cplx dre = (s.evaluate(z + h, w) - s.evaluate(z - h, w)) / (2.0 * h);
    const cplx dim = (s.evaluate(z + h * iu, w) - s.evaluate(z - h * iu, w)) / (2.0 * h);
    rep.holomorphy = std::max(rep.holomorphy, std::abs(dim - iu * dre) / scale);
  }
  rep.pass = rep.evenness <= tol_even && rep.rotation <= tol_rot && rep.holomorphy <= tol_holo;
  return rep;
}

}  // namespace reslab::sym
