#ifndef POINCARE21_QUADRATURE_HPP
#define POINCARE21_QUADRATURE_HPP

// Quadrature building blocks: Gauss-Legendre rules, an adaptive 1D
// integrator used by the oracle code paths, and a deterministic parallel
// reduction whose result is bit-identical for any worker count.

#include "core.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <vector>

namespace poincare21 {

// ---------------------------------------------------------------- workers

namespace detail {
inline std::atomic<int>& worker_override()
{
  static std::atomic<int> value{0};
  return value;
}
} // namespace detail

/// Number of workers: explicit override > POINCARE21_THREADS > hardware.
inline int max_workers()
{
  const int forced = detail::worker_override().load();
  if (forced > 0) return forced;
  if (const char* env = std::getenv("POINCARE21_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Override the worker count (0 restores env/hardware selection).
inline void set_max_workers(int n) { detail::worker_override().store(n); }

/// Deterministic indexed sum: f(i) summed over i in [0, n). Work is split
/// into fixed chunks summed sequentially in index order; chunk results are
/// then folded pairwise. The grouping depends only on n and chunk, never on
/// the worker count, so the floating-point result is bit-stable.
template <typename T, typename F>
T parallel_indexed_sum(std::size_t n, F&& f, std::size_t chunk = 1024)
{
  if (n == 0) return T{};
  const std::size_t nchunks = (n + chunk - 1) / chunk;
  std::vector<T> partial(nchunks, T{});

  const int workers = std::min<int>(max_workers(), static_cast<int>(nchunks));
  auto run_chunk = [&](std::size_t c) {
    const std::size_t lo = c * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    T acc{};
    for (std::size_t i = lo; i < hi; ++i) acc += f(i);
    partial[c] = acc;
  };

  if (workers <= 1) {
    for (std::size_t c = 0; c < nchunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1))
          run_chunk(c);
      });
    for (auto& t : pool) t.join();
  }

  // Pairwise fold of the chunk array, fixed tree shape.
  std::size_t len = nchunks;
  while (len > 1) {
    const std::size_t half = (len + 1) / 2;
    for (std::size_t i = 0; i + half < len; ++i) partial[i] += partial[i + half];
    len = half;
  }
  return partial[0];
}

// ---------------------------------------------------- Gauss-Legendre rule

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
inline Rule1D gauss_legendre(int n)
{
  if (n < 1) throw DomainError("gauss_legendre: need n >= 1");
  static std::mutex mutex;
  static std::unordered_map<int, Rule1D> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  Rule1D rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  constexpr double pi = 3.14159265358979323846;
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0;
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
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  {
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(n, rule);
  }
  return rule;
}

/// Gauss-Legendre rule mapped to [a, b].
inline Rule1D gauss_legendre_on(int n, double a, double b)
{
  Rule1D base = gauss_legendre(n);
  Rule1D out;
  out.nodes.resize(n);
  out.weights.resize(n);
  const double mid = 0.5 * (a + b), len = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    out.nodes[i] = mid + len * base.nodes[i];
    out.weights[i] = len * base.weights[i];
  }
  return out;
}

// ------------------------------------------------- adaptive 1D integrator

namespace detail {

template <typename F>
double adaptive_simpson_rec(const F& f, double a, double b, double fa, double fm,
                            double fb, double whole, double tol, int depth)
{
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0) throw ConvergenceFailure("adaptive_integrate: max depth reached");
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson on [a, b]. Independent of the Gauss-Legendre engine;
/// used as the 1D oracle path.
template <typename F>
double adaptive_integrate(const F& f, double a, double b, double tol = 1e-12,
                          int max_depth = 48)
{
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole,
                                      std::max(tol, 1e-15), max_depth);
}

/// Adaptive integral of f over [a, infinity) in expanding windows; throws
/// DivergentIntegral when the window contributions fail to decay.
template <typename F>
double integrate_semi_infinite(const F& f, double a, double tol = 1e-11)
{
  double total = 0;
  double width = 1.0;
  double lo = a;
  int quiet = 0;
  for (int k = 0; k < 80; ++k) {
    const double hi = lo + width;
    const double piece = adaptive_integrate(f, lo, hi, tol);
    total += piece;
    if (std::abs(piece) <= tol * (1.0 + std::abs(total)))
      ++quiet;
    else
      quiet = 0;
    if (quiet >= 2) return total;
    if (!std::isfinite(total) || std::abs(total) > 1e12)
      throw DivergentIntegral("integrate_semi_infinite: tail does not decay");
    lo = hi;
    width *= 2.0;
  }
  throw DivergentIntegral("integrate_semi_infinite: tail does not decay");
}

/// Adaptive integral of f over (0, b] with a possible integrable or
/// divergent endpoint at 0, evaluated over shrinking dyadic windows.
template <typename F>
double integrate_from_zero(const F& f, double b, double tol = 1e-11)
{
  double total = 0;
  double hi = b;
  int quiet = 0;
  for (int k = 0; k < 120; ++k) {
    const double lo = 0.5 * hi;
    const double piece = adaptive_integrate(f, lo, hi, tol);
    total += piece;
    if (std::abs(piece) <= tol * (1.0 + std::abs(total)))
      ++quiet;
    else
      quiet = 0;
    if (quiet >= 2) return total;
    if (!std::isfinite(total) || std::abs(total) > 1e12)
      throw DivergentIntegral("integrate_from_zero: endpoint not integrable");
    hi = lo;
  }
  throw DivergentIntegral("integrate_from_zero: endpoint not integrable");
}

} // namespace poincare21

#endif
