#include "reslab/numerics.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

namespace reslab {

namespace {
std::mutex gl_mutex;
std::map<int, GaussLegendre> gl_cache;
std::atomic<int> g_threads{0};
}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  if (n < 1) throw domain_error("gauss_legendre: order must be positive");
  std::lock_guard<std::mutex> lock(gl_mutex);
  auto it = gl_cache.find(n);
  if (it != gl_cache.end()) return it->second;

  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    gl.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    gl.weights[n - 1 - i] = gl.weights[i];
  }
  auto [pos, ok] = gl_cache.emplace(n, std::move(gl));
  (void)ok;
  return pos->second;
}

int thread_count() {
  int t = g_threads.load();
  if (t > 0) return t;
  if (const char* env = std::getenv("RESLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

void set_thread_count(int n) { g_threads.store(n >= 1 ? n : 0); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int threads) {
  const int t = threads >= 1 ? threads : thread_count();
  if (t <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int spawn = static_cast<int>(std::min<std::size_t>(t, n));
  pool.reserve(spawn);
  for (int k = 0; k < spawn; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

cplx integrate_periodic_fixed(const std::function<cplx(double)>& f, int nodes) {
  const double h = 2.0 * pi / nodes;
  const double offset = 0.5 * h;
  std::vector<cplx> vals(static_cast<std::size_t>(nodes));
  parallel_for(static_cast<std::size_t>(nodes),
               [&](std::size_t j) { vals[j] = f(offset + h * static_cast<double>(j)); });
  return ordered_sum(vals) * h;
}

cplx integrate_periodic(const std::function<cplx(double)>& f, const QuadOptions& opts) {
  cplx prev = integrate_periodic_fixed(f, opts.min_nodes);
  for (int n = 2 * opts.min_nodes; n <= opts.max_nodes; n *= 2) {
    const cplx cur = integrate_periodic_fixed(f, n);
    if (rel_diff(cur, prev) < opts.rel_tol) return cur;
    prev = cur;
  }
  return prev;
}

cplx integrate_segment(const std::function<cplx(cplx)>& f, cplx a, cplx b, int panels, int order) {
  const GaussLegendre& gl = gauss_legendre(order);
  const cplx step = (b - a) / static_cast<double>(panels);
  std::vector<cplx> vals(static_cast<std::size_t>(panels));
  parallel_for(static_cast<std::size_t>(panels), [&](std::size_t p) {
    const cplx lo = a + step * static_cast<double>(p);
    const cplx mid = lo + 0.5 * step;
    cplx s = 0.0;
    for (int k = 0; k < order; ++k) s += gl.weights[k] * f(mid + 0.5 * step * gl.nodes[k]);
    vals[p] = s * 0.5 * step;
  });
  return ordered_sum(vals);
}

}  // namespace reslab
