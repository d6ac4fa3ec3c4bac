#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reslab {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx iu{0.0, 1.0};

// rho_X^2 = <rho,rho> for SL(3,R)/SO(3) with the scaled inner product.
inline constexpr double rho_x_sq = 12.0;
inline const double rho_x = 3.46410161513775459;  // 2*sqrt(3)
inline constexpr int weyl_order = 6;

// xi = exp(i*pi/3), the primitive sixth root used throughout.
inline const cplx xi{0.5, 0.86602540378443864676};

class pole_error : public std::runtime_error {
public:
  pole_error(const std::string& what, cplx where) : std::runtime_error(what), location(where) {}
  cplx location;
};

class domain_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Deterministic RNG for sample grids. Avoids std::uniform_real_distribution,
// whose output is implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  cplx unit_circle() {
    const double t = 2.0 * pi * uniform();
    return {std::cos(t), std::sin(t)};
  }

  cplx box(double re_lo, double re_hi, double im_lo, double im_hi) {
    return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
  }

  // Annulus a <= |w| <= b.
  cplx annulus(double a, double b) { return uniform(a, b) * unit_circle(); }

private:
  std::uint64_t state_;
};

struct GaussLegendre {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Nodes/weights by Newton iteration on the Legendre recurrence.
const GaussLegendre& gauss_legendre(int n);

// Sum in fixed index order, independent of how values were produced.
inline cplx ordered_sum(const std::vector<cplx>& v) {
  cplx s = 0.0;
  for (const cplx& x : v) s += x;
  return s;
}

int thread_count();  // RESLAB_THREADS, else 1
void set_thread_count(int n);

// Evaluates fn(i) for i in [0, n) on up to `threads` workers, storing each
// result at index i. Reduction order is the caller's, so totals do not
// depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int threads = -1);

struct QuadOptions {
  int min_nodes = 512;
  int max_nodes = 1 << 14;
  double rel_tol = 1e-10;
  double node_guard = 1e-6;  // min distance of any node's th-argument to i(Z+1/2)
};

// Periodic trapezoid rule over theta in [0, 2pi) with nodes offset by half a
// step, doubling until two successive levels agree to opts.rel_tol.
cplx integrate_periodic(const std::function<cplx(double)>& f, const QuadOptions& opts);

// Fixed-order periodic trapezoid (no refinement); deterministic node set.
cplx integrate_periodic_fixed(const std::function<cplx(double)>& f, int nodes);

// Composite Gauss-Legendre over a straight segment [a, b] in the complex
// plane, `panels` panels of `order` points each. Returns sum f(z) dz.
cplx integrate_segment(const std::function<cplx(cplx)>& f, cplx a, cplx b, int panels, int order);

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }
inline bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

inline double rel_diff(cplx a, cplx b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace reslab
