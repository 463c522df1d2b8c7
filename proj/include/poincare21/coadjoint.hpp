#ifndef POINCARE21_COADJOINT_HPP
#define POINCARE21_COADJOINT_HPP

// The (alpha, beta) basis of the Lie algebra, the hat automorphism, the
// 6x6 adjoint matrix M(g), the coadjoint action and its Casimir invariants.

#include "core.hpp"
#include "lorentz.hpp"

#include <optional>

namespace poincare21 {

/// Algebra element X = (alpha, beta): alpha weights the J generators,
/// beta is the translation part.
struct AlgebraElement {
  Vec3 alpha = Vec3::Zero();
  Vec3 beta = Vec3::Zero();
};

/// Dual element X* = (alpha*, beta*) written as two row vectors.
struct DualElement {
  RowVec3 alphaStar = RowVec3::Zero();
  RowVec3 betaStar = RowVec3::Zero();
};

inline RowVec6 as_row6(const DualElement& x)
{
  RowVec6 r;
  r << x.alphaStar(0), x.alphaStar(1), x.alphaStar(2),
       x.betaStar(0), x.betaStar(1), x.betaStar(2);
  return r;
}

inline DualElement dual_from_row6(const RowVec6& r)
{
  return {RowVec3(r(0), r(1), r(2)), RowVec3(r(3), r(4), r(5))};
}

inline Vec6 as_col6(const AlgebraElement& x)
{
  Vec6 c;
  c << x.alpha(0), x.alpha(1), x.alpha(2), x.beta(0), x.beta(1), x.beta(2);
  return c;
}

inline AlgebraElement algebra_from_col6(const Vec6& c)
{
  return {Vec3(c(0), c(1), c(2)), Vec3(c(3), c(4), c(5))};
}

/// The matrix (J0 v | J1 v | J2 v) assembled column by column.
inline Mat3 j_dot_v(const Vec3& v)
{
  Mat3 m;
  m << 0, v(2), v(1),
       -v(2), 0, v(0),
       v(1), v(0), 0;
  return m;
}

/// Hat automorphism: hat(L) = flip * L^T * flip.
/// On the generators it fixes J0 and J2 and negates J1 (so it swaps the
/// null directions J+ and J-).
inline Mat3 hat(const Mat3& lambda)
{
  return flip() * lambda.transpose() * flip();
}

/// The 6x6 adjoint matrix: Ad(g) X = M(g) (alpha, beta)^T with blocks
/// [[hat(L)^{-1}, 0], [-(J.v) hat(L)^{-1}, L]].
inline Mat6 adjoint_matrix(const GroupElement& g)
{
  const Mat3 hat_inv = hat(g.lambda).inverse();
  Mat6 m = Mat6::Zero();
  m.block<3, 3>(0, 0) = hat_inv;
  m.block<3, 3>(3, 0) = -j_dot_v(g.v) * hat_inv;
  m.block<3, 3>(3, 3) = g.lambda;
  return m;
}

/// M(g)^{-1}: blocks [[hat(L), 0], [L^{-1} (J.v), L^{-1}]].
inline Mat6 adjoint_matrix_inverse(const GroupElement& g)
{
  const Mat3 li = g.lambda.inverse();
  Mat6 m = Mat6::Zero();
  m.block<3, 3>(0, 0) = hat(g.lambda);
  m.block<3, 3>(3, 0) = li * j_dot_v(g.v);
  m.block<3, 3>(3, 3) = li;
  return m;
}

inline AlgebraElement ad(const GroupElement& g, const AlgebraElement& x)
{
  return algebra_from_col6(adjoint_matrix(g) * as_col6(x));
}

/// Coadjoint action (alpha*, beta*) -> (alpha* hat(L) + beta* L^{-1}(J.v), beta* L^{-1}).
inline DualElement coad(const GroupElement& g, const DualElement& x)
{
  const Mat3 li = g.lambda.inverse();
  DualElement out;
  out.alphaStar = x.alphaStar * hat(g.lambda) + x.betaStar * li * j_dot_v(g.v);
  out.betaStar = x.betaStar * li;
  return out;
}

/// Frobenius residual of the intertwining identity
/// (J.(L^{-1} v)) hat(L) = L^{-1} (J.v), which holds exactly on SO0(2,1).
inline double intertwining_residual(const Mat3& lambda, const Vec3& v)
{
  const Mat3 li = lambda.inverse();
  return (j_dot_v(li * v) * hat(lambda) - li * j_dot_v(v)).norm();
}

/// Casimir values of the coadjoint action:
///   i1 = beta* eta beta*^T, i2 = alpha* flip beta*^T,
///   i3 = alpha* eta alpha*^T on the beta* = 0 stratum only.
/// i2 is exactly invariant because (J.v) flip is antisymmetric; it is used
/// as a classifier feature alongside i1.
struct CasimirValues {
  double i1 = 0;
  double i2 = 0;
  std::optional<double> i3;
};

inline CasimirValues casimirs(const DualElement& x)
{
  CasimirValues c;
  c.i1 = minkowski_dot(x.betaStar, x.betaStar);
  c.i2 = x.alphaStar * flip() * x.betaStar.transpose();
  const double scale = std::max(1.0, as_row6(x).norm());
  if (x.betaStar.norm() <= 1e-12 * scale)
    c.i3 = minkowski_dot(x.alphaStar, x.alphaStar);
  return c;
}

/// Group element of the one-parameter flow of a basis generator.
inline GroupElement basis_flow(GeneratorId id, double t)
{
  if (is_rotation_or_boost(id)) return {exp_generator(id, t), Vec3::Zero()};
  return {Mat3::Identity(), t * translation_direction(id)};
}

/// Flow exp(t X) of an arbitrary direction in the 6-dimensional generator
/// space, c = (c_J0, c_J1, c_J2, c_P0, c_P1, c_P2). The flows used here take
/// |t| <= 1e-6, so a short Taylor series sits well below double roundoff.
inline GroupElement direction_flow(const Vec6& c, double t)
{
  const Mat3 a = c(0) * generator_matrix(GeneratorId::J0) +
                 c(1) * generator_matrix(GeneratorId::J1) +
                 c(2) * generator_matrix(GeneratorId::J2);
  const Mat3 at = a * t;
  const Mat3 at2 = at * at;
  const Mat3 expa =
      Mat3::Identity() + at + 0.5 * at2 + (1.0 / 6.0) * at2 * at + (1.0 / 24.0) * at2 * at2;
  // Translation block of the 4x4 exponential: t * (I + tA/2 + (tA)^2/6 + ...) b.
  const Mat3 tr = Mat3::Identity() + 0.5 * at + (1.0 / 6.0) * at2 + (1.0 / 24.0) * at2 * at;
  return {expa, t * (tr * Vec3(c(3), c(4), c(5)))};
}

/// Central finite-difference tangent of the coadjoint action at x along the
/// 6-direction c, step 1e-6.
inline RowVec6 coad_tangent(const DualElement& x, const Vec6& c, double step = 1e-6)
{
  const RowVec6 plus = as_row6(coad(direction_flow(c, step), x));
  const RowVec6 minus = as_row6(coad(direction_flow(c, -step), x));
  return (plus - minus) / (2.0 * step);
}

/// 6x6 matrix whose row i is the finite-difference coadjoint tangent along
/// basis generator i in the order (J0, J1, J2, P0, P1, P2).
inline Mat6 infinitesimal_coad_span(const DualElement& x, double step = 1e-6)
{
  Mat6 span = Mat6::Zero();
  for (int i = 0; i < 6; ++i) {
    Vec6 c = Vec6::Zero();
    c(i) = 1.0;
    span.row(i) = coad_tangent(x, c, step);
  }
  return span;
}

/// Numerical rank with threshold rel_tol * sigma_max.
inline int svd_rank(const Mat6& m, double rel_tol = 1e-8)
{
  Eigen::JacobiSVD<Mat6> svd(m);
  const auto& s = svd.singularValues();
  if (s(0) <= 0) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

} // namespace poincare21

#endif
