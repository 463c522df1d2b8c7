#ifndef POINCARE21_LORENTZ_HPP
#define POINCARE21_LORENTZ_HPP

// Linear-algebra kernel for R^{2,1}, SO0(2,1) and the semidirect product
// group R^{2,1} x| SO0(2,1): generators, one-parameter subgroups, group
// composition, Iwasawa factors, and the point-dependent boosts for the
// upper mass hyperboloid and the upper cone.
//
// Conventions (fixed project-wide):
//   * dual vectors (momenta k, orbit points q) are rows and multiply
//     matrices from the left, k -> k * M;
//   * space vectors (translations v) are columns, v -> M * v;
//   * only the identity component SO0(2,1) is admitted (det = 1, L00 > 0);
//   * angles are normalized to (-pi, pi].

#include "core.hpp"

#include <cmath>
#include <optional>

namespace poincare21 {

enum class GeneratorId { J0, J1, J2, Jplus, Jminus, P0, P1, P2 };

inline bool is_rotation_or_boost(GeneratorId id)
{
  return id == GeneratorId::J0 || id == GeneratorId::J1 || id == GeneratorId::J2 ||
         id == GeneratorId::Jplus || id == GeneratorId::Jminus;
}

inline const char* generator_name(GeneratorId id)
{
  switch (id) {
    case GeneratorId::J0: return "J0";
    case GeneratorId::J1: return "J1";
    case GeneratorId::J2: return "J2";
    case GeneratorId::Jplus: return "Jplus";
    case GeneratorId::Jminus: return "Jminus";
    case GeneratorId::P0: return "P0";
    case GeneratorId::P1: return "P1";
    case GeneratorId::P2: return "P2";
  }
  return "?";
}

/// 3x3 algebra matrix of a J-type generator.
inline Mat3 generator_matrix(GeneratorId id)
{
  Mat3 g = Mat3::Zero();
  switch (id) {
    case GeneratorId::J0:
      g(1, 2) = -1; g(2, 1) = 1;
      break;
    case GeneratorId::J1:
      g(0, 2) = 1; g(2, 0) = 1;
      break;
    case GeneratorId::J2:
      g(0, 1) = 1; g(1, 0) = 1;
      break;
    case GeneratorId::Jplus:
      return generator_matrix(GeneratorId::J0) + generator_matrix(GeneratorId::J1);
    case GeneratorId::Jminus:
      return generator_matrix(GeneratorId::J0) - generator_matrix(GeneratorId::J1);
    default:
      throw DomainError("generator_matrix: P-type generator has no 3x3 matrix");
  }
  return g;
}

/// Translation direction of a P-type generator.
inline Vec3 translation_direction(GeneratorId id)
{
  switch (id) {
    case GeneratorId::P0: return Vec3(1, 0, 0);
    case GeneratorId::P1: return Vec3(0, 1, 0);
    case GeneratorId::P2: return Vec3(0, 0, 1);
    default:
      throw DomainError("translation_direction: not a P-type generator");
  }
}

/// Closed-form one-parameter subgroup matrix exp(t * J_id).
inline Mat3 exp_generator(GeneratorId id, double t)
{
  Mat3 m = Mat3::Identity();
  switch (id) {
    case GeneratorId::J0: {
      const double c = std::cos(t), s = std::sin(t);
      m(1, 1) = c; m(1, 2) = -s;
      m(2, 1) = s; m(2, 2) = c;
      return m;
    }
    case GeneratorId::J1: {
      const double ch = std::cosh(t), sh = std::sinh(t);
      m(0, 0) = ch; m(0, 2) = sh;
      m(2, 0) = sh; m(2, 2) = ch;
      return m;
    }
    case GeneratorId::J2: {
      const double ch = std::cosh(t), sh = std::sinh(t);
      m(0, 0) = ch; m(0, 1) = sh;
      m(1, 0) = sh; m(1, 1) = ch;
      return m;
    }
    case GeneratorId::Jplus: {
      const double h = 0.5 * t * t;
      m << 1 + h, h, t,
           -h, 1 - h, -t,
           t, t, 1;
      return m;
    }
    case GeneratorId::Jminus: {
      const double h = 0.5 * t * t;
      m << 1 + h, -h, -t,
           h, 1 - h, -t,
           -t, t, 1;
      return m;
    }
    default:
      throw DomainError("exp_generator: P-type generators do not exponentiate to SO(2,1)");
  }
}

/// Frobenius norm of L*eta*L^T - eta.
inline double metric_residual(const Mat3& lambda)
{
  return (lambda * metric() * lambda.transpose() - metric()).norm();
}

/// Identity-component membership test (metric preservation, det = 1, L00 > 0).
inline bool is_identity_component(const Mat3& lambda, double tol = 1e-8)
{
  const double scale = std::max(1.0, lambda.squaredNorm());
  return metric_residual(lambda) <= tol * scale &&
         std::abs(lambda.determinant() - 1.0) <= tol * scale &&
         lambda(0, 0) > 0.0;
}

inline void require_identity_component(const Mat3& lambda, const char* where,
                                       double tol = 1e-8)
{
  if (!is_identity_component(lambda, tol))
    throw DomainError(std::string(where) + ": matrix is not in SO0(2,1)");
}

/// Group element g = (Lambda, v) of R^{2,1} x| SO0(2,1).
struct GroupElement {
  Mat3 lambda = Mat3::Identity();
  Vec3 v = Vec3::Zero();
};

inline GroupElement group_identity() { return {}; }

/// Semidirect product law (L1, v1)(L2, v2) = (L1 L2, L1 v2 + v1).
inline GroupElement compose(const GroupElement& g1, const GroupElement& g2)
{
  return {g1.lambda * g2.lambda, g1.lambda * g2.v + g1.v};
}

/// g^{-1} = (L^{-1}, -L^{-1} v).
inline GroupElement inverse(const GroupElement& g)
{
  const Mat3 li = g.lambda.inverse();
  return {li, -(li * g.v)};
}

enum class NullConvention { JMinus, JPlus };

/// k a n factors: Lambda = exp(J0, theta) exp(J2, gamma) exp(J+-, rho).
struct IwasawaFactors {
  double theta = 0;
  double gamma = 0;
  double rho = 0;
  NullConvention convention = NullConvention::JMinus;
};

inline Mat3 lorentz_from_iwasawa(const IwasawaFactors& f)
{
  const GeneratorId n =
      f.convention == NullConvention::JMinus ? GeneratorId::Jminus : GeneratorId::Jplus;
  return exp_generator(GeneratorId::J0, f.theta) *
         exp_generator(GeneratorId::J2, f.gamma) * exp_generator(n, f.rho);
}

/// Iwasawa decomposition of an identity-component matrix.
///
/// The n factor fixes the null column (1,1,0)^T (J- convention, default)
/// or (1,-1,0)^T (J+), so the k and a parameters can be read off the image
/// of that column, and rho from the residual factor.
inline IwasawaFactors iwasawa(const Mat3& lambda,
                              NullConvention convention = NullConvention::JMinus,
                              double tol = 1e-9)
{
  IwasawaFactors f;
  f.convention = convention;
  const bool minus = convention == NullConvention::JMinus;
  const Vec3 fixed = minus ? Vec3(1, 1, 0) : Vec3(1, -1, 0);
  const Vec3 w = lambda * fixed;
  if (!(w(0) > 0))
    throw DomainError("iwasawa: input not in the identity component");
  f.gamma = minus ? std::log(w(0)) : -std::log(w(0));
  f.theta = minus ? std::atan2(w(2), w(1)) : std::atan2(-w(2), -w(1));
  const Mat3 n = exp_generator(GeneratorId::J2, -f.gamma) *
                 exp_generator(GeneratorId::J0, -f.theta) * lambda;
  f.rho = n(2, 1);
  const double scale = std::max(1.0, lambda.norm());
  if ((lorentz_from_iwasawa(f) - lambda).norm() > tol * scale)
    throw DomainError("iwasawa: reconstruction residual exceeds tolerance");
  return f;
}

/// Rotation angle of an (approximate) exp(J0, theta) matrix, in (-pi, pi].
inline double rotation_angle(const Mat3& r, double tol = 1e-8)
{
  const double theta = std::atan2(r(2, 1), r(1, 1));
  const double scale = std::max(1.0, r.norm());
  if ((r - exp_generator(GeneratorId::J0, theta)).norm() > tol * scale)
    throw FormMismatch("rotation_angle: matrix is not a J0 rotation");
  return wrap_angle(theta);
}

/// Parameter of an (approximate) exp(J+-, t) null translation.
/// Detects which of the two forms matches; the identity matches both with t=0.
inline double translation_param(const Mat3& n, double tol = 1e-8)
{
  const double scale = std::max(1.0, n.norm());
  const double u_plus = 0.5 * (n(2, 0) + n(2, 1));
  const double u_minus = 0.5 * (n(2, 1) - n(2, 0));
  const double res_plus = (n - exp_generator(GeneratorId::Jplus, u_plus)).norm();
  const double res_minus = (n - exp_generator(GeneratorId::Jminus, u_minus)).norm();
  if (res_plus <= res_minus && res_plus <= tol * scale) return u_plus;
  if (res_minus <= tol * scale) return u_minus;
  throw FormMismatch("translation_param: matrix is not a J+- translation");
}

/// Pure boost mapping the vertex (m,0,0) to q on the upper mass-m hyperboloid,
/// as a row action: (m,0,0) * boost = q. Symmetric, and its inverse is the
/// boost of qbar = (q0,-q1,-q2).
inline Mat3 boost_to_hyperboloid_point(const RowVec3& q, double m)
{
  if (!(m > 0)) throw DomainError("boost_to_hyperboloid_point: mass must be positive");
  const double scale = std::max({1.0, m * m, q.squaredNorm()});
  if (std::abs(minkowski_dot(q, q) - m * m) > 1e-8 * scale)
    throw DomainError("boost_to_hyperboloid_point: q is not on the mass shell");
  if (!(q(0) > 0))
    throw DomainError("boost_to_hyperboloid_point: q is not on the upper sheet");
  const double d = m + q(0);
  Mat3 b;
  b << q(0), q(1), q(2),
       q(1), m + q(1) * q(1) / d, q(1) * q(2) / d,
       q(2), q(1) * q(2) / d, m + q(2) * q(2) / d;
  return b / m;
}

/// Matrix taking the cone anchor (1,1,0) to q by row action: (1,1,0) * M = q.
/// The chart divides by q0 + q1 and degenerates on the ray q1 -> -q0.
inline Mat3 boost_to_cone_point(const RowVec3& q)
{
  const double scale = std::max(1.0, q.squaredNorm());
  if (std::abs(minkowski_dot(q, q)) > 1e-8 * scale)
    throw DomainError("boost_to_cone_point: q is not on the cone");
  if (!(q(0) > 0))
    throw DomainError("boost_to_cone_point: q is not on the upper cone");
  const double den = q(0) + q(1);
  if (den <= 1e-12 * q(0))
    throw ChartSingularity("boost_to_cone_point: chart singular at q0 + q1 -> 0");
  const double q0 = q(0), q1 = q(1), q2 = q(2);
  Mat3 b;
  b << 1 + q0 * q0 + q0 - q1, q0 * q1 - 1 - q0 + q1, q2 * (1 + q0),
       q0 * q1 - 1 - q0 + q1, 1 + q1 * q1 + q0 - q1, -q2 * (1 - q1),
       q2 * (1 + q0), -q2 * (1 - q1), q0 + q1 + q2 * q2;
  return b / den;
}

/// Polar parameters of a cone point: q = (lambda, lambda cos theta, lambda sin theta).
struct ConeParams {
  double theta = 0;
  double lambda = 1;
};

inline ConeParams cone_projection_params(const RowVec3& q)
{
  if (!(q(0) > 0))
    throw DomainError("cone_projection_params: apex and lower cone excluded (q0 <= 0)");
  const double scale = std::max(1.0, q.squaredNorm());
  if (std::abs(minkowski_dot(q, q)) > 1e-8 * scale)
    throw DomainError("cone_projection_params: q is not on the cone");
  return {std::atan2(q(2), q(1)), q(0)};
}

inline RowVec3 cone_point(double theta, double lambda)
{
  if (!(lambda > 0)) throw DomainError("cone_point: lambda must be positive");
  return {lambda, lambda * std::cos(theta), lambda * std::sin(theta)};
}

} // namespace poincare21

#endif
