#include "reslab/contour.hpp"

#include <cmath>

namespace reslab::contour {

namespace {

// Integrand of F in the theta parametrization of |w| = r:
// (1/2pi) S(z,w) z^3 prod_u c(uw) th(pi z c(uw)).
cplx f_integrand(const sym::SpectralSymbol& s, cplx z, cplx w, double node_guard) {
  cplx prod = 1.0;
  for (const cplx u : {cplx(1.0), xi, xi * xi}) {
    const cplx a = z * branch::c(u * w);
    if (sym::dist_to_half_integer_poles(a) < node_guard)
      throw pole_error("contour node inside the th pole guard band", a);
    prod *= branch::c(u * w) * sym::th_pi(a);
  }
  return s.evaluate(z, w) * z * z * z * prod / (2.0 * pi);
}

void require_off_f_cut(cplx z) {
  if (z.real() == 0.0 && std::abs(z.imag()) >= 0.5)
    throw domain_error("F: z on i((-inf,-1/2] u [1/2,inf))");
}

constexpr double kW = 6.0;  // |W| for A2

}  // namespace

cplx F_unit(const sym::SpectralSymbol& s, cplx z, const QuadOptions& opts) {
  require_off_f_cut(z);
  if (z == cplx(0.0)) return 0.0;
  return integrate_periodic(
      [&](double t) { return f_integrand(s, z, std::polar(1.0, t), opts.node_guard); }, opts);
}

cplx F_r(const sym::SpectralSymbol& s, cplx z, double r, const QuadOptions& opts) {
  if (z == cplx(0.0)) return 0.0;
  if (!branch::residue_condition_holds(z, r))
    throw domain_error("F_r: residue condition fails at z");
  return integrate_periodic(
      [&](double t) { return f_integrand(s, z, std::polar(r, t), opts.node_guard); }, opts);
}

cplx G_n(const sym::SpectralSymbol& s, long n, cplx z) {
  if (z.real() == 0.0)
    throw domain_error("G_n: z on the imaginary axis (use the surface lift)");
  const cplx x = iu * (static_cast<double>(n) + 0.5) / z;
  const cplx w0 = branch::c_inv(x);
  const cplx sc = branch::s_of_c_inv(x);
  return -3.0 * sym::psi(s, z, w0) * sym::phi_z1(z, xi * w0) * sym::phi_z1(z, xi * xi * w0) * x /
         (iu * pi * sc);
}

cplx G_r(const sym::SpectralSymbol& s, cplx z, double r) {
  cplx sum = 0.0;
  for (const long n : branch::enumerate_S(r, z)) sum += G_n(s, n, z);
  return sum;
}

DecompositionReport check_decomposition(const sym::SpectralSymbol& s, cplx z, double r, double tol,
                                        const QuadOptions& opts) {
  DecompositionReport rep;
  rep.f = F_unit(s, z, opts);
  rep.f_r = F_r(s, z, r, opts);
  rep.g_r = (z == cplx(0.0)) ? cplx(0.0) : G_r(s, z, r);
  const cplx rhs = rep.f_r + 2.0 * pi * iu * rep.g_r;
  rep.abs_residual = std::abs(rep.f - rhs);
  rep.rel_residual = rel_diff(rep.f, rhs);
  rep.pass = rep.rel_residual < tol;
  return rep;
}

Resolvent::Resolvent(sym::SymbolPtr s, ResolventOptions opts)
    : sym_(std::move(s)), opts_(opts) {
  if (opts_.truncation > 0.0) {
    trunc_ = opts_.truncation;
  } else {
    // Push T out until the symbol has decayed to numerical oblivion on R+.
    double t = 20.0;
    const double scale = std::abs(sym_->evaluate(0.5, 1.0)) + 1e-30;
    while (t < 60.0 && std::abs(sym_->evaluate(t, 1.0)) * std::pow(t, 6.0) > 1e-18 * scale)
      t += 5.0;
    trunc_ = t;
  }
  if (sym_->expensive() && opts_.coarse_factor == 1) opts_.coarse_factor = 2;
}

void Resolvent::build_tables() const {
  if (tables_built_) return;

  const double cf = static_cast<double>(opts_.coarse_factor);
  const int order = opts_.segment_order;
  const GaussLegendre& gl = gauss_legendre(order);

  auto add_segment = [&](std::vector<WeightedNode>& out, cplx a, cplx b, double width) {
    const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / width)));
    const cplx step = (b - a) / static_cast<double>(panels);
    for (int p = 0; p < panels; ++p) {
      const cplx mid = a + step * (p + 0.5);
      for (int k = 0; k < order; ++k)
        out.push_back({mid + 0.5 * step * gl.nodes[k], 0.5 * step * gl.weights[k]});
    }
  };

  real_nodes_.clear();
  add_segment(real_nodes_, 0.0, 4.0, 0.25 * cf);
  add_segment(real_nodes_, 4.0, 8.0, 0.5 * cf);
  add_segment(real_nodes_, 8.0, trunc_, 1.0 * cf);

  gamma_nodes_.clear();
  const cplx top = 2.0 * opts_.y0 * iu;
  add_segment(gamma_nodes_, 0.0, top, 0.05 * cf);
  add_segment(gamma_nodes_, top, top + trunc_, 0.5 * cf);

  const int circle_nodes = sym_->expensive() ? 160 : 512;
  auto fill = [&](const std::vector<WeightedNode>& nodes, std::vector<cplx>& vals) {
    vals.resize(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t i) {
      vals[i] = integrate_periodic_fixed(
          [&](double t) {
            return f_integrand(*sym_, nodes[i].point, std::polar(1.0, t), opts_.circle.node_guard);
          },
          circle_nodes);
    });
  };
  fill(real_nodes_, real_f_);
  fill(gamma_nodes_, gamma_f_);
  tables_built_ = true;
}

cplx Resolvent::upper(cplx z) const {
  if (!(z.imag() > 0.0)) throw domain_error("Resolvent::upper: Im z must be positive");
  build_tables();
  cplx sum = 0.0;
  for (std::size_t i = 0; i < real_nodes_.size(); ++i) {
    const cplx r = real_nodes_[i].point;
    sum += real_nodes_[i].weight * real_f_[i] * r / (rho_x_sq * r * r - z * z);
  }
  return sum / kW;
}

cplx Resolvent::h_part(cplx zs) const {
  build_tables();
  if (zs.imag() == 0.0 && zs.real() <= 0.0)
    throw domain_error("Resolvent::h_part: z' on (-inf, 0]");
  cplx sum = 0.0;
  for (std::size_t i = 0; i < real_nodes_.size(); ++i)
    sum += real_nodes_[i].weight * real_f_[i] / (real_nodes_[i].point + zs);
  for (std::size_t i = 0; i < gamma_nodes_.size(); ++i)
    sum += gamma_nodes_[i].weight * gamma_f_[i] / (gamma_nodes_[i].point - zs);
  return sum / (2.0 * kW * rho_x_sq);
}

cplx Resolvent::f_plain(cplx zs) const { return F_unit(*sym_, zs, opts_.circle); }

cplx Resolvent::below(cplx z) const {
  const cplx zs = z / rho_x;
  return h_part(zs) + pi * iu / (kW * rho_x_sq) * f_plain(zs);
}

double Resolvent::log_jump_residual(cplx z) const {
  if (!(z.imag() < 0.0)) throw domain_error("log_jump_residual: Im z must be negative");
  const cplx f = f_plain(z / rho_x);
  const cplx lhs = upper(-z) - below(z);
  const cplx rhs = pi * iu / (rho_x_sq * kW) * f;
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

}  // namespace reslab::contour
