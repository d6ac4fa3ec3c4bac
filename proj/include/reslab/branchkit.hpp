#pragma once

#include <set>

#include "reslab/numerics.hpp"

namespace reslab::branch {

// Evaluation side for points on a branch cut: value at x + i0 or x - i0.
enum class Side { none, plus, minus };

// c(z) = (z + 1/z)/2 and s(z) = (z - 1/z)/2 on C^x.
cplx c(cplx z);
cplx s(cplx z);

// Principal square root: sqrt(R e^{iT}) = sqrt(R) e^{iT/2}, -pi < T < pi.
// Points on (-inf, 0] need an explicit side.
cplx sqrt_principal(cplx z, Side side = Side::none);

// sqrt(z+1) sqrt(z-1), extended holomorphically across (-inf, -1) so that it
// is defined on C \ [-1, 1]. Odd. Values on the cut (-1, 1) require a side:
// +i0 gives +i sqrt(1-x^2), -i0 gives -i sqrt(1-x^2).
cplx two_sqrt_product(cplx z, Side side = Side::none);

// c^{-1}(z) = z - sqrt(z+1) sqrt(z-1), the inverse of c on D_1 \ {0}.
cplx c_inv(cplx z, Side side = Side::none);

// (s o c^{-1})(z) = -sqrt(z+1) sqrt(z-1).
cplx s_of_c_inv(cplx z, Side side = Side::none);

// The ellipse E_{c(r), s(r)} for 0 < r < 1: semi-axes c(r) > 1 and |s(r)|.
struct Ellipse {
  explicit Ellipse(double radius);
  double r;       // generating circle radius, 0 < r < 1
  double cr;      // c(r) > 1
  double sr;      // |s(r)| > 0
  // (Re p / cr)^2 + (Im p / sr)^2, the standard-position ellipse functional.
  double functional(cplx p) const;
  bool contains(cplx p) const { return functional(p) < 1.0; }
  // Boundary point at parameter t: cr cos t + i sr sin t.
  cplx boundary(double t) const;
};

inline double c_of_r(double r) { return 0.5 * (r + 1.0 / r); }
// r from a target c(r) = a > 1 with 0 < r < 1.
inline double r_of_c(double a) { return a - std::sqrt(a * a - 1.0); }

bool ellipse_contains(double r, cplx p);

// True iff i(Z + 1/2) does not meet z * boundary(E_{c(r),s(r)}), with a
// safety margin on the ellipse functional.
bool residue_condition_holds(cplx z, double r, double margin = 1e-9);

// S_{r,z} = { n in Z : i(n + 1/2) in z (E_{c(r),s(r)} \ [-1,1]) }.
std::set<long> enumerate_S(double r, cplx z);

}  // namespace reslab::branch
