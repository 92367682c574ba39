#include "dkps3/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace dkps3::geometry {

namespace {

void require_interior(double r, double z) {
  if (!(r > 0.0 && r < M_PI))
    throw std::domain_error("geometry: r must lie strictly inside (0, pi)");
  if (!(std::abs(z) < M_PI_2))
    throw std::domain_error("geometry: |z| must be strictly less than pi/2");
}

}  // namespace

Eigen::Matrix4d metric(double r, double z) {
  const double c2 = std::cos(z) * std::cos(z);
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  g(kT, kT) = 1.0;
  g(kR, kR) = -c2;
  g(kPhi, kPhi) = -c2 * std::sin(r) * std::sin(r);
  g(kZ, kZ) = -1.0;
  return g;
}

Eigen::Matrix4d metric_inverse(double r, double z) {
  require_interior(r, z);
  Eigen::Matrix4d ginv = Eigen::Matrix4d::Zero();
  const Eigen::Matrix4d g = metric(r, z);
  for (int i = 0; i < 4; ++i) ginv(i, i) = 1.0 / g(i, i);
  return ginv;
}

Eigen::Matrix4d metric_deriv_r(double r, double z) {
  const double c2 = std::cos(z) * std::cos(z);
  Eigen::Matrix4d d = Eigen::Matrix4d::Zero();
  d(kPhi, kPhi) = -c2 * 2.0 * std::sin(r) * std::cos(r);
  return d;
}

Eigen::Matrix4d metric_deriv_z(double r, double z) {
  const double sc = 2.0 * std::sin(z) * std::cos(z);
  Eigen::Matrix4d d = Eigen::Matrix4d::Zero();
  d(kR, kR) = sc;
  d(kPhi, kPhi) = sc * std::sin(r) * std::sin(r);
  return d;
}

Eigen::Matrix4d inverse_tetrad(double r, double z) {
  require_interior(r, z);
  Eigen::Matrix4d e = Eigen::Matrix4d::Zero();
  e(0, kT) = 1.0;
  e(1, kR) = 1.0 / std::cos(z);
  e(2, kPhi) = 1.0 / (std::cos(z) * std::sin(r));
  e(3, kZ) = 1.0;
  return e;
}

Eigen::Matrix4d covariant_tetrad(double r, double z) {
  const Eigen::Matrix4d g = metric(r, z);
  const Eigen::Matrix4d einv = inverse_tetrad(r, z);
  Eigen::Matrix4d e = Eigen::Matrix4d::Zero();
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu) e(a, mu) = g(mu, mu) * einv(a, mu);
  return e;
}

ConnectionData christoffel_closed_form(double r, double z) {
  require_interior(r, z);
  const double tz = std::tan(z);
  const double sr = std::sin(r), cr = std::cos(r);
  const double sz = std::sin(z), cz = std::cos(z);

  ConnectionData c;
  auto& G = c.christoffel;

  G[kSpatialR][kSpatialR][kSpatialZ] = -tz;
  G[kSpatialR][kSpatialZ][kSpatialR] = -tz;
  G[kSpatialR][kSpatialPhi][kSpatialPhi] = -sr * cr;

  G[kSpatialPhi][kSpatialR][kSpatialPhi] = cr / sr;
  G[kSpatialPhi][kSpatialPhi][kSpatialR] = cr / sr;
  G[kSpatialPhi][kSpatialPhi][kSpatialZ] = -tz;
  G[kSpatialPhi][kSpatialZ][kSpatialPhi] = -tz;

  G[kSpatialZ][kSpatialR][kSpatialR] = sz * cz;
  G[kSpatialZ][kSpatialPhi][kSpatialPhi] = sz * cz * sr * sr;

  c.gamma_122 = 1.0 / (cz * std::tan(r));
  c.gamma_311 = -tz;
  c.gamma_322 = -tz;
  return c;
}

double FieldConfig::nu(double r) const { return m + B * (1.0 - std::cos(r)); }

double FieldConfig::a_phi(double r) const { return B * (std::cos(r) - 1.0); }

double field_strength(const FieldConfig& cfg, double r) { return cfg.B * std::sin(r); }

double tetrad_orthonormality_residual(double r, double z) {
  const Eigen::Matrix4d g = metric(r, z);
  const Eigen::Matrix4d e = inverse_tetrad(r, z);
  Eigen::Matrix4d eta = Eigen::Matrix4d::Zero();
  eta.diagonal() << 1.0, -1.0, -1.0, -1.0;
  const Eigen::Matrix4d got = e * g * e.transpose();
  return (got - eta).cwiseAbs().maxCoeff();
}

double metric_compatibility_residual(double r, double z) {
  const ConnectionData c = christoffel_closed_form(r, z);
  const Eigen::Matrix4d g = metric(r, z);
  const Eigen::Matrix4d dgr = metric_deriv_r(r, z);
  const Eigen::Matrix4d dgz = metric_deriv_z(r, z);

  // Spatial coordinate indices in the full metric, aligned with the
  // (r, phi, z) order of the Christoffel tables.
  const std::array<int, 3> coord{kR, kPhi, kZ};
  auto dg = [&](int lam, int mu, int nu) {
    if (coord[lam] == kR) return dgr(coord[mu], coord[nu]);
    if (coord[lam] == kZ) return dgz(coord[mu], coord[nu]);
    return 0.0;  // no phi dependence
  };

  double worst = 0.0;
  for (int lam = 0; lam < 3; ++lam)
    for (int mu = 0; mu < 3; ++mu)
      for (int nu = 0; nu < 3; ++nu) {
        double resid = dg(lam, mu, nu);
        for (int sig = 0; sig < 3; ++sig) {
          resid -= c.christoffel[sig][lam][mu] * g(coord[sig], coord[nu]);
          resid -= c.christoffel[sig][lam][nu] * g(coord[mu], coord[sig]);
        }
        worst = std::max(worst, std::abs(resid));
      }
  return worst;
}

}  // namespace dkps3::geometry
