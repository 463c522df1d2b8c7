#ifndef POINCARE21_CORE_HPP
#define POINCARE21_CORE_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace poincare21 {

using Vec3 = Eigen::Vector3d;          // column vector in R^{2,1}
using RowVec3 = Eigen::RowVector3d;    // dual (row) vector
using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using RowVec6 = Eigen::Matrix<double, 1, 6>;
using Complex = std::complex<double>;

/// Minkowski metric diag(+1,-1,-1).
inline const Mat3& metric()
{
  static const Mat3 eta = (Mat3() << 1, 0, 0, 0, -1, 0, 0, 0, -1).finished();
  return eta;
}

/// The flip matrix diag(1,1,-1) used by the hat automorphism.
/// (The source material overloads the letter m for this and for mass;
/// here it is always "flip".)
inline const Mat3& flip()
{
  static const Mat3 f = (Mat3() << 1, 0, 0, 0, 1, 0, 0, 0, -1).finished();
  return f;
}

/// Mathematical precondition violation (maps to CLI exit code 4).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Eq.-style cone chart breaks down where q0 + q1 -> 0.
struct ChartSingularity : DomainError {
  explicit ChartSingularity(const std::string& what) : DomainError(what) {}
};

/// A matrix failed to match the expected little-group form
/// ("not a rotation" / "not a translation").
struct FormMismatch : DomainError {
  explicit FormMismatch(const std::string& what) : DomainError(what) {}
};

/// A quadrature refinement failed to settle within tolerance.
struct ConvergenceFailure : DomainError {
  explicit ConvergenceFailure(const std::string& what) : DomainError(what) {}
};

/// An admissibility-type integral diverges for the given envelope.
struct DivergentIntegral : DomainError {
  explicit DivergentIntegral(const std::string& what) : DomainError(what) {}
};

/// Minkowski pairing a0*b0 - a1*b1 - a2*b2 (rows, columns or mixed).
template <typename A, typename B>
double minkowski_dot(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b)
{
  return a(0) * b(0) - a(1) * b(1) - a(2) * b(2);
}

/// Plain componentwise pairing <k; v> between a dual vector and a vector.
template <typename A, typename B>
double euclid_pair(const Eigen::MatrixBase<A>& k, const Eigen::MatrixBase<B>& v)
{
  return k(0) * v(0) + k(1) * v(1) + k(2) * v(2);
}

/// Normalize an angle to (-pi, pi].
inline double wrap_angle(double a)
{
  constexpr double pi = 3.14159265358979323846;
  a = std::fmod(a, 2.0 * pi);
  if (a <= -pi) a += 2.0 * pi;
  if (a > pi) a -= 2.0 * pi;
  return a;
}

} // namespace poincare21

#endif
