#ifndef POINCARE21_MEASURES_HPP
#define POINCARE21_MEASURES_HPP

// Charts and invariant measures on the upper two-sheeted hyperboloid and
// the upper cone, plus the product-rule quadrature engine shared by the
// representation and coherent-state code.
//
// Both invariant measures flatten in "polar" chart coordinates:
//   hyperboloid  dq1 dq2 / q0 = du dphi   (u = q0 >= m)
//   cone         dq1 dq2 / q0 = dlam dth  (lam = q0 > 0)
// so the engine is a mapped Gauss-Legendre rule in the radial coordinate
// times a uniform rule in the angle.

#include "core.hpp"
#include "lorentz.hpp"
#include "quadrature.hpp"
#include "rng.hpp"

#include <functional>
#include <optional>

namespace poincare21 {

struct Manifold {
  enum class Kind { HyperboloidUpper, ConeUpper };
  Kind kind = Kind::HyperboloidUpper;
  double mass = 1.0;

  static Manifold hyperboloid(double m)
  {
    if (!(m > 0)) throw DomainError("Manifold: mass must be positive");
    return {Kind::HyperboloidUpper, m};
  }
  static Manifold cone() { return {Kind::ConeUpper, 0.0}; }

  bool is_cone() const { return kind == Kind::ConeUpper; }
  /// Lower limit of the radial (time-component) coordinate.
  double radial_origin() const { return is_cone() ? 0.0 : mass; }
  const char* name() const { return is_cone() ? "cone" : "hyperboloid"; }
};

enum class DecayClass { Gaussian, Exponential, Compact };

/// Function on an orbit, carried as an evaluator plus its decay class.
struct OrbitFunction {
  std::function<Complex(const RowVec3&)> eval;
  DecayClass decay = DecayClass::Exponential;

  Complex operator()(const RowVec3& k) const { return eval(k); }
};

struct QuadratureSpec {
  int radial_nodes = 128;
  int angular_nodes = 64;
  std::optional<double> truncation;  // radial window above the origin, if finite

  QuadratureSpec doubled() const
  {
    return {2 * radial_nodes, 2 * angular_nodes, truncation};
  }
};

inline void validate(const QuadratureSpec& spec)
{
  if (spec.radial_nodes < 4 || spec.angular_nodes < 4)
    throw DomainError("QuadratureSpec: node counts must be >= 4");
}

/// Chart map. Hyperboloid chart is (q1, q2); cone chart is (theta, lambda).
inline RowVec3 chart_point(const Manifold& man, double c1, double c2)
{
  if (man.is_cone()) return cone_point(c1, c2);
  const double m = man.mass;
  return {std::sqrt(m * m + c1 * c1 + c2 * c2), c1, c2};
}

/// Density of the invariant measure relative to dq1 dq2 (hyperboloid) or
/// dlambda dtheta (cone).
inline double measure_density(const Manifold& man, const RowVec3& k)
{
  return man.is_cone() ? 1.0 : 1.0 / k(0);
}

/// Point of the manifold at radial coordinate u (= time component) and
/// angle phi.
inline RowVec3 polar_point(const Manifold& man, double u, double phi)
{
  if (man.is_cone()) return cone_point(phi, u);
  const double m = man.mass;
  const double r = std::sqrt(std::max(0.0, (u - m) * (u + m)));
  return {u, r * std::cos(phi), r * std::sin(phi)};
}

namespace detail {

struct RadialRule {
  std::vector<double> u;
  std::vector<double> w;
};

/// Radial rule in the time coordinate: u = u0 + s/(1-s) with Gauss-Legendre
/// nodes in s, or a plain rule on [u0, u0+T] when a truncation T is given.
inline RadialRule radial_rule(const Manifold& man, const QuadratureSpec& spec)
{
  RadialRule out;
  const double u0 = man.radial_origin();
  if (spec.truncation) {
    Rule1D r = gauss_legendre_on(spec.radial_nodes, u0, u0 + *spec.truncation);
    out.u = std::move(r.nodes);
    out.w = std::move(r.weights);
    return out;
  }
  Rule1D s = gauss_legendre_on(spec.radial_nodes, 0.0, 1.0);
  out.u.resize(s.nodes.size());
  out.w.resize(s.nodes.size());
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    const double t = s.nodes[i];
    const double om = 1.0 - t;
    out.u[i] = u0 + t / om;
    out.w[i] = s.weights[i] / (om * om);
  }
  return out;
}

} // namespace detail

/// Integral of f against the invariant measure, by the radial x angular
/// product rule. Deterministic for a fixed spec, for any worker count.
template <typename F>
Complex integrate_fn(const Manifold& man, F&& f, const QuadratureSpec& spec)
{
  validate(spec);
  const detail::RadialRule rad = detail::radial_rule(man, spec);
  const int na = spec.angular_nodes;
  constexpr double two_pi = 6.28318530717958647692;
  const double wa = two_pi / na;
  const std::size_t total = rad.u.size() * static_cast<std::size_t>(na);
  return parallel_indexed_sum<Complex>(total, [&](std::size_t idx) {
    const std::size_t ir = idx / na;
    const std::size_t ia = idx % na;
    const double phi = wa * (static_cast<double>(ia) + 0.5);
    const RowVec3 k = polar_point(man, rad.u[ir], phi);
    return rad.w[ir] * wa * Complex(f(k));
  });
}

inline Complex integrate(const Manifold& man, const OrbitFunction& f,
                         const QuadratureSpec& spec)
{
  return integrate_fn(man, [&](const RowVec3& k) { return f(k); }, spec);
}

/// Integrate and verify stability under node doubling; throws
/// ConvergenceFailure when the refinement moves the result by more than tol.
inline Complex integrate_checked(const Manifold& man, const OrbitFunction& f,
                                 const QuadratureSpec& spec, double tol = 1e-9)
{
  const Complex coarse = integrate(man, f, spec);
  const Complex fine = integrate(man, f, spec.doubled());
  if (std::abs(fine - coarse) > tol * (1.0 + std::abs(fine)))
    throw ConvergenceFailure("integrate_checked: node doubling moved the result");
  return fine;
}

/// Relative defect of measure invariance under the point action k -> k L^{-1}.
inline double check_measure_invariance(const Manifold& man, const Mat3& lambda,
                                       const OrbitFunction& f, const QuadratureSpec& spec)
{
  require_identity_component(lambda, "check_measure_invariance");
  const Mat3 li = lambda.inverse();
  const Complex base = integrate(man, f, spec);
  const Complex moved =
      integrate_fn(man, [&](const RowVec3& k) { return f(RowVec3(k * li)); }, spec);
  const double denom = std::abs(base);
  if (denom == 0) return std::abs(moved);
  return std::abs(moved - base) / denom;
}

/// L2 inner product <f, g> = integral of conj(f) g against the invariant
/// measure.
inline Complex inner_product(const Manifold& man, const OrbitFunction& f,
                             const OrbitFunction& g, const QuadratureSpec& spec)
{
  return integrate_fn(
      man, [&](const RowVec3& k) { return std::conj(f(k)) * g(k); }, spec);
}

// ----------------------------------------------------- phase-space integrals

/// Evaluator over a phase-space point (q on the manifold, p in the fiber
/// plane R^2).
using PhaseSpaceFunction = std::function<Complex(const RowVec3&, const Eigen::Vector2d&)>;

struct QuadratureSpec4 {
  QuadratureSpec orbit;                        // rule for the q factor
  int p_nodes = 48;                            // per momentum axis
  double p_scale = 1.0;                        // rational-map scale for R
  std::optional<std::array<double, 2>> p_box;  // finite box per axis, if set
};

/// 4D integral over the cotangent orbit with measure dmu = dp1 dp2 dnu(q).
inline Complex phase_space_integrate(const Manifold& man, const PhaseSpaceFunction& f,
                                     const QuadratureSpec4& spec)
{
  validate(spec.orbit);
  if (spec.p_nodes < 4) throw DomainError("phase_space_integrate: p_nodes must be >= 4");

  // Momentum rule per axis: finite box, or R via p = s*t/(1-t^2).
  Rule1D axis;
  if (spec.p_box) {
    axis = gauss_legendre_on(spec.p_nodes, (*spec.p_box)[0], (*spec.p_box)[1]);
  } else {
    Rule1D t = gauss_legendre(spec.p_nodes);
    axis.nodes.resize(t.nodes.size());
    axis.weights.resize(t.nodes.size());
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
      const double x = t.nodes[i];
      const double om = 1.0 - x * x;
      axis.nodes[i] = spec.p_scale * x / om;
      axis.weights[i] = t.weights[i] * spec.p_scale * (1.0 + x * x) / (om * om);
    }
  }

  const detail::RadialRule rad = detail::radial_rule(man, spec.orbit);
  const int na = spec.orbit.angular_nodes;
  constexpr double two_pi = 6.28318530717958647692;
  const double wa = two_pi / na;
  const std::size_t np = axis.nodes.size();
  const std::size_t total = rad.u.size() * static_cast<std::size_t>(na) * np * np;

  return parallel_indexed_sum<Complex>(total, [&](std::size_t idx) {
    const std::size_t i2 = idx % np;
    const std::size_t i1 = (idx / np) % np;
    const std::size_t ia = (idx / (np * np)) % na;
    const std::size_t ir = idx / (np * np * na);
    const double phi = wa * (static_cast<double>(ia) + 0.5);
    const RowVec3 q = polar_point(man, rad.u[ir], phi);
    const Eigen::Vector2d p(axis.nodes[i1], axis.nodes[i2]);
    const double w = rad.w[ir] * wa * axis.weights[i1] * axis.weights[i2];
    return w * f(q, p);
  });
}

struct MonteCarloSpec {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  double sigma_q = 1.5;  // chart importance width
  double sigma_p = 1.5;  // momentum importance width
};

struct MonteCarloResult {
  Complex estimate{0, 0};
  double std_error = 0;
};

namespace detail {

struct McAccum {
  Complex sum{0, 0};
  double sumsq = 0;
  McAccum& operator+=(const McAccum& o)
  {
    sum += o.sum;
    sumsq += o.sumsq;
    return *this;
  }
};

inline double gaussian_pdf(double x, double sigma)
{
  constexpr double inv_sqrt_two_pi = 0.3989422804014326779;
  const double z = x / sigma;
  return inv_sqrt_two_pi / sigma * std::exp(-0.5 * z * z);
}

} // namespace detail

/// Monte Carlo companion of phase_space_integrate: Gaussian importance
/// sampling in the chart and momentum coordinates, counter-based streams,
/// deterministic for any worker count. Returns (estimate, standard error).
inline MonteCarloResult phase_space_monte_carlo(const Manifold& man,
                                                const PhaseSpaceFunction& f,
                                                const MonteCarloSpec& spec)
{
  if (spec.samples == 0) throw DomainError("phase_space_monte_carlo: need samples >= 1");
  const CounterRng rng(spec.seed);
  constexpr double two_pi = 6.28318530717958647692;

  auto sample_value = [&](std::size_t i) -> Complex {
    const Eigen::Vector2d p(spec.sigma_p * rng.gaussian(i, 0),
                            spec.sigma_p * rng.gaussian(i, 2));
    double weight =
        1.0 / (detail::gaussian_pdf(p(0), spec.sigma_p) * detail::gaussian_pdf(p(1), spec.sigma_p));
    RowVec3 q;
    if (man.is_cone()) {
      // theta uniform, log-lambda Gaussian; dnu = dlam dth = lam dgam dth.
      const double theta = rng.uniform(i, 4, -3.14159265358979323846, 3.14159265358979323846);
      const double gam = spec.sigma_q * rng.gaussian(i, 5);
      const double lam = std::exp(gam);
      q = cone_point(theta, lam);
      weight *= two_pi * lam / detail::gaussian_pdf(gam, spec.sigma_q);
    } else {
      const double q1 = spec.sigma_q * rng.gaussian(i, 4);
      const double q2 = spec.sigma_q * rng.gaussian(i, 6);
      q = chart_point(man, q1, q2);
      weight *= 1.0 / (q(0) * detail::gaussian_pdf(q1, spec.sigma_q) *
                       detail::gaussian_pdf(q2, spec.sigma_q));
    }
    return weight * f(q, p);
  };

  const detail::McAccum acc = parallel_indexed_sum<detail::McAccum>(
      spec.samples,
      [&](std::size_t i) {
        const Complex v = sample_value(i);
        return detail::McAccum{v, std::norm(v)};
      },
      4096);

  MonteCarloResult out;
  const double n = static_cast<double>(spec.samples);
  out.estimate = acc.sum / n;
  const double var = std::max(0.0, acc.sumsq / n - std::norm(out.estimate));
  out.std_error = std::sqrt(var / n);
  return out;
}

} // namespace poincare21

#endif
