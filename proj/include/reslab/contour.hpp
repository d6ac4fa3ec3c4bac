#pragma once

#include <memory>
#include <set>
#include <vector>

#include "reslab/branchkit.hpp"
#include "reslab/numerics.hpp"
#include "reslab/symbols.hpp"

namespace reslab::contour {

// Kinds of parametrized curves used by the engine.
enum class CurveKind { unit_circle, circle_r, rotated_ellipse, chart_circle, gamma_plus };

struct ContourSpec {
  CurveKind kind = CurveKind::unit_circle;
  double radius = 1.0;      // circle_r / chart_circle
  cplx center = 0.0;        // chart_circle
  cplx z = 1.0;             // rotated_ellipse: the dilation/rotation factor
  double ellipse_r = 0.5;   // rotated_ellipse: generating circle radius
  double gp_height = 0.1;   // gamma_plus: y0; the curve rises to 2*y0
  double gp_extent = 20.0;  // gamma_plus: horizontal truncation T
  int order = 512;
};

// F(z) with the unit-circle contour: (1/2pi) Int S(z,w) z^3
// prod_u c(uw) th(pi z c(uw)) dtheta. Even; F(0) = 0; F(z)/z^6 bounded at 0.
cplx F_unit(const sym::SpectralSymbol& s, cplx z, const QuadOptions& opts = {});

// F_r(z): the same integrand over the deformed contour |w| = r.
// Requires the residue condition i(Z+1/2) cap z dE_{c(r),s(r)} = empty.
cplx F_r(const sym::SpectralSymbol& s, cplx z, double r, const QuadOptions& opts = {});

// G_{(n)}(z) for z off the imaginary axis.
cplx G_n(const sym::SpectralSymbol& s, long n, cplx z);

// G_r(z) = sum over S_{r,z} of G_{(n)}(z).
cplx G_r(const sym::SpectralSymbol& s, cplx z, double r);

struct DecompositionReport {
  cplx f, f_r;
  cplx g_r;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  bool pass = false;
};

// Checks F = F_r + 2 pi i G_r at z.
DecompositionReport check_decomposition(const sym::SpectralSymbol& s, cplx z, double r,
                                        double tol = 1e-8, const QuadOptions& opts = {});

struct ResolventOptions {
  double y0 = 0.1;          // gamma_plus rises to 2*y0 = 0.2 < 1/2
  double truncation = 0.0;  // 0: auto max(20, 6/sqrt(beta)) via decay probe
  int segment_order = 24;
  int coarse_factor = 1;    // multiplies panel widths for expensive symbols
  QuadOptions circle;
};

// The resolvent matrix element R(z) = [R(z) f](y) in the original spectral
// variable, through the polar integral (upper half plane) and through the
// deformed holomorphic part H plus (pi i / (|W| rho_X^2)) F (fourth quadrant
// and lower half plane). F-values along the fixed quadrature trees are
// cached per symbol.
class Resolvent {
public:
  Resolvent(sym::SymbolPtr s, ResolventOptions opts = {});

  // (1/|W|) Int_0^inf F(r) r / (rho_X^2 r^2 - z^2) dr, Im z > 0.
  cplx upper(cplx z) const;

  // H(z') + (pi i / (|W| rho_X^2)) F(z') at z' = z / rho_X, valid on
  // Q = {Re z' > x0, 0 <= Im z' < y0} and on {Im z' < 0} minus the ray
  // i(-inf, -1/2].
  cplx below(cplx z) const;

  // Holomorphic part H at the rescaled argument z'.
  cplx h_part(cplx z_scaled) const;

  // F at the rescaled argument (unit-circle contour).
  cplx f_plain(cplx z_scaled) const;

  // R(z e^{2 i pi}) - R(z) - (2 pi i / (rho_X^2 |W|)) F(z / rho_X), relative
  // to the scale of the three terms; Im z < 0.
  double log_jump_residual(cplx z) const;

  const sym::SpectralSymbol& symbol() const { return *sym_; }
  const ResolventOptions& options() const { return opts_; }
  double truncation() const { return trunc_; }

private:
  struct WeightedNode {
    cplx point;
    cplx weight;  // includes dz of the parametrization
  };

  void build_tables() const;

  sym::SymbolPtr sym_;
  ResolventOptions opts_;
  double trunc_;
  mutable std::vector<WeightedNode> real_nodes_;   // on [0, T]
  mutable std::vector<WeightedNode> gamma_nodes_;  // on gamma_plus
  mutable std::vector<cplx> real_f_, gamma_f_;
  mutable bool tables_built_ = false;
};

}  // namespace reslab::contour
