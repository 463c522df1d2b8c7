#ifndef POINCARE21_ORBITS_HPP
#define POINCARE21_ORBITS_HPP

// Representation-generating orbits of SO0(2,1) on the dual of R^{2,1},
// coadjoint orbits of the full group, and their classification: geometry,
// dimension, Casimirs and stabilizer directions.

#include "coadjoint.hpp"
#include "core.hpp"
#include "lorentz.hpp"
#include "rng.hpp"

#include <string>
#include <vector>

namespace poincare21 {

enum class MomentumGeometry {
  Degenerate,
  TwoSheetUpper,
  TwoSheetLower,
  ConeUpper,
  ConeLower,
  OneSheet
};

struct MomentumOrbitClass {
  MomentumGeometry kind = MomentumGeometry::Degenerate;
  double mass = 0;  // > 0 for hyperboloid classes
};

inline const char* momentum_geometry_name(MomentumGeometry g)
{
  switch (g) {
    case MomentumGeometry::Degenerate: return "origin";
    case MomentumGeometry::TwoSheetUpper: return "two-sheet-upper";
    case MomentumGeometry::TwoSheetLower: return "two-sheet-lower";
    case MomentumGeometry::ConeUpper: return "cone-upper";
    case MomentumGeometry::ConeLower: return "cone-lower";
    case MomentumGeometry::OneSheet: return "one-sheet";
  }
  return "?";
}

/// Classify a dual momentum vector by the sign of its Minkowski square.
/// Zero tests use eps = 1e-9 * (1 + |k|^2).
inline MomentumOrbitClass classify_momentum(const RowVec3& k)
{
  const double c = minkowski_dot(k, k);
  const double eps = 1e-9 * (1.0 + k.squaredNorm());
  if (k.norm() <= eps) return {MomentumGeometry::Degenerate, 0};
  if (c > eps)
    return {k(0) > 0 ? MomentumGeometry::TwoSheetUpper : MomentumGeometry::TwoSheetLower,
            std::sqrt(c)};
  if (c < -eps) return {MomentumGeometry::OneSheet, std::sqrt(-c)};
  return {k(0) > 0 ? MomentumGeometry::ConeUpper : MomentumGeometry::ConeLower, 0};
}

struct CoadjointOrbitClass {
  std::string geometry;
  int dimension = 0;
  CasimirValues casimirs;
};

/// Classify a coadjoint orbit through x: geometry label from the invariant
/// quadratic forms and sign tests, dimension from the rank of the
/// infinitesimal action.
inline CoadjointOrbitClass classify_coadjoint(const DualElement& x)
{
  CoadjointOrbitClass out;
  out.casimirs = casimirs(x);
  out.dimension = svd_rank(infinitesimal_coad_span(x));
  const double eps = 1e-9 * (1.0 + as_row6(x).squaredNorm());
  if (x.betaStar.norm() > eps) {
    out.geometry = std::string(momentum_geometry_name(classify_momentum(x.betaStar).kind)) +
                   "+plane";
  } else {
    out.geometry = momentum_geometry_name(classify_momentum(x.alphaStar).kind);
  }
  return out;
}

/// Iwasawa-parameter draw in [-2, 2]^3, the bounded range used for all
/// pseudo-random group elements.
inline Mat3 random_lorentz(const CounterRng& rng, std::uint64_t index)
{
  IwasawaFactors f;
  f.theta = rng.uniform(index, 0, -2.0, 2.0);
  f.gamma = rng.uniform(index, 1, -2.0, 2.0);
  f.rho = rng.uniform(index, 2, -2.0, 2.0);
  return lorentz_from_iwasawa(f);
}

inline GroupElement random_group_element(const CounterRng& rng, std::uint64_t index)
{
  GroupElement g;
  g.lambda = random_lorentz(rng, index);
  g.v = Vec3(rng.uniform(index, 3, -1.0, 1.0), rng.uniform(index, 4, -1.0, 1.0),
             rng.uniform(index, 5, -1.0, 1.0));
  return g;
}

struct MomentumOrbitSample {
  std::vector<RowVec3> points;
  std::vector<IwasawaFactors> params;
  MomentumOrbitClass orbit_class;
};

/// Sample the representation-generating orbit k0 * Lambda_i for
/// pseudo-random identity-component Lambda_i.
inline MomentumOrbitSample sample_repgen_orbit(const RowVec3& k0, std::size_t n,
                                               std::uint64_t seed)
{
  if (n < 1) throw DomainError("sample_repgen_orbit: need n >= 1");
  MomentumOrbitSample s;
  s.orbit_class = classify_momentum(k0);
  s.points.reserve(n);
  CounterRng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const Mat3 lambda = random_lorentz(rng, i);
    s.points.push_back(k0 * lambda);
    s.params.push_back(iwasawa(lambda));
  }
  return s;
}

struct CoadjointOrbitSample {
  std::vector<DualElement> points;
  std::vector<GroupElement> elements;
  CoadjointOrbitClass orbit_class;
};

/// Sample the coadjoint orbit coad(g_i, x) for pseudo-random g_i.
inline CoadjointOrbitSample sample_coadjoint_orbit(const DualElement& x, std::size_t n,
                                                   std::uint64_t seed)
{
  if (n < 1) throw DomainError("sample_coadjoint_orbit: need n >= 1");
  CoadjointOrbitSample s;
  s.orbit_class = classify_coadjoint(x);
  s.points.reserve(n);
  CounterRng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const GroupElement g = random_group_element(rng, i);
    s.points.push_back(coad(g, x));
    s.elements.push_back(g);
  }
  return s;
}

struct StabilizerDirection {
  std::string name;
  Vec6 direction;  // unit vector in (J0, J1, J2, P0, P1, P2) coordinates
};

struct StabilizerReport {
  std::vector<StabilizerDirection> directions;
  int kernel_dimension = 0;  // 6 - orbit dimension
  bool spans_kernel = false;
};

/// Probe a catalog of generator directions (the six basis generators, the
/// null combinations J0 +- J1 and the mixed translations P0 +- P1) for
/// membership in the stabilizer algebra of x, i.e. vanishing infinitesimal
/// coadjoint action. Directions are added only while they enlarge the span,
/// so the returned set is a basis whenever spans_kernel holds.
inline StabilizerReport stabilizer_probe(const DualElement& x, double tol = 1e-9)
{
  struct Candidate {
    const char* name;
    Vec6 dir;
  };
  const double inv_sqrt2 = 0.7071067811865475244;
  std::vector<Candidate> catalog;
  {
    const char* names[6] = {"J0", "J1", "J2", "P0", "P1", "P2"};
    for (int i = 0; i < 6; ++i) {
      Vec6 c = Vec6::Zero();
      c(i) = 1.0;
      catalog.push_back({names[i], c});
    }
    Vec6 jp = Vec6::Zero(), jm = Vec6::Zero(), pp = Vec6::Zero(), pm = Vec6::Zero();
    jp(0) = jp(1) = inv_sqrt2;
    jm(0) = inv_sqrt2; jm(1) = -inv_sqrt2;
    pp(3) = pp(4) = inv_sqrt2;
    pm(3) = inv_sqrt2; pm(4) = -inv_sqrt2;
    catalog.push_back({"Jplus", jp});
    catalog.push_back({"Jminus", jm});
    catalog.push_back({"P0+P1", pp});
    catalog.push_back({"P0-P1", pm});
  }

  StabilizerReport report;
  const double scale = 1.0 + as_row6(x).norm();
  report.kernel_dimension = 6 - svd_rank(infinitesimal_coad_span(x));

  Eigen::MatrixXd accepted(0, 6);
  for (const auto& cand : catalog) {
    if (coad_tangent(x, cand.dir).norm() > tol * scale) continue;
    Eigen::MatrixXd trial(accepted.rows() + 1, 6);
    trial.topRows(accepted.rows()) = accepted;
    trial.row(accepted.rows()) = cand.dir.transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(trial);
    const auto& s = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < s.size(); ++i)
      if (s(i) > 1e-8 * s(0)) ++rank;
    if (rank <= accepted.rows()) continue;  // linearly dependent on earlier picks
    accepted = trial;
    report.directions.push_back({cand.name, cand.dir});
  }
  report.spans_kernel =
      static_cast<int>(report.directions.size()) == report.kernel_dimension;
  return report;
}

struct IsomorphismReport {
  int momentum_dim = 0;
  int coadjoint_dim = 0;
  bool dims_match = false;        // coadjoint_dim == 2 * momentum_dim
  bool projection_on_orbit = false;
  double max_form_residual = 0;   // worst |<b,b> - <k0,k0>| over sampled points
};

/// Check the chain O_{(0,k0)} ~ T* O*_{k0}: the coadjoint orbit through
/// (0, k0) has twice the dimension of the momentum orbit of k0, and the
/// beta* projection of sampled coadjoint points stays on that orbit.
inline IsomorphismReport verify_isomorphism(const RowVec3& k0, std::size_t samples = 64,
                                            std::uint64_t seed = 1)
{
  if (k0.norm() == 0) throw DomainError("verify_isomorphism: k0 must be nonzero");
  IsomorphismReport rep;

  Mat3 tangent;
  tangent.row(0) = k0 * generator_matrix(GeneratorId::J0);
  tangent.row(1) = k0 * generator_matrix(GeneratorId::J1);
  tangent.row(2) = k0 * generator_matrix(GeneratorId::J2);
  Eigen::JacobiSVD<Mat3> svd(tangent);
  const auto& s = svd.singularValues();
  for (int i = 0; i < 3; ++i)
    if (s(i) > 1e-8 * s(0)) ++rep.momentum_dim;

  DualElement x;
  x.betaStar = k0;
  rep.coadjoint_dim = svd_rank(infinitesimal_coad_span(x));
  rep.dims_match = rep.coadjoint_dim == 2 * rep.momentum_dim;

  const MomentumOrbitClass cls = classify_momentum(k0);
  const double form0 = minkowski_dot(k0, k0);
  rep.projection_on_orbit = true;
  const auto sample = sample_coadjoint_orbit(x, samples, seed);
  for (const auto& pt : sample.points) {
    const double res = std::abs(minkowski_dot(pt.betaStar, pt.betaStar) - form0);
    rep.max_form_residual =
        std::max(rep.max_form_residual, res / (1.0 + pt.betaStar.squaredNorm()));
    if (classify_momentum(pt.betaStar).kind != cls.kind) rep.projection_on_orbit = false;
  }
  if (rep.max_form_residual > 1e-8) rep.projection_on_orbit = false;
  return rep;
}

} // namespace poincare21

#endif
