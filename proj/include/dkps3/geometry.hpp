#pragma once

// S^3 in cylindric coordinates (t, r, phi, z): metric, tetrad, Christoffel
// symbols, Ricci rotation coefficients, and the uniform magnetic potential.
// Units hbar = c = rho = 1; charge absorbed into B.

#include <array>

#include <Eigen/Dense>

namespace dkps3::geometry {

// Coordinate indices for the full metric.
enum Coord : int { kT = 0, kR = 1, kPhi = 2, kZ = 3 };

// Spatial indices used by the Christoffel tables.
enum Spatial : int { kSpatialR = 0, kSpatialPhi = 1, kSpatialZ = 2 };

// Diagonal metric ds^2 = dt^2 - cos^2 z (dr^2 + sin^2 r dphi^2) - dz^2.
Eigen::Matrix4d metric(double r, double z);
Eigen::Matrix4d metric_inverse(double r, double z);

// Analytic coordinate derivatives d g / d r and d g / d z.
Eigen::Matrix4d metric_deriv_r(double r, double z);
Eigen::Matrix4d metric_deriv_z(double r, double z);

// Inverse tetrad e_(a)^mu (rows: frame index a, cols: coordinate mu):
// diag(1, 1/cos z, 1/(cos z sin r), 1).
Eigen::Matrix4d inverse_tetrad(double r, double z);

// Covariant tetrad e_(a)mu = g_{mu nu} e_(a)^nu.
Eigen::Matrix4d covariant_tetrad(double r, double z);

struct ConnectionData {
  // christoffel[lambda][mu][nu] over spatial indices (r, phi, z); symmetric in (mu, nu).
  std::array<std::array<std::array<double, 3>, 3>, 3> christoffel{};
  double gamma_122 = 0.0;  // 1 / (cos z tan r)
  double gamma_311 = 0.0;  // -tan z
  double gamma_322 = 0.0;  // -tan z
};

// Closed forms of Eq-level symbols; throws std::domain_error on the chart
// boundary r in {0, pi} or |z| = pi/2.
ConnectionData christoffel_closed_form(double r, double z);

struct FieldConfig {
  double B = 0.0;
  int m = 0;

  double nu(double r) const;     // m + B (1 - cos r)
  double a_phi(double r) const;  // B (cos r - 1) = -2 B sin^2(r/2)
};

// Single nonvanishing field tensor component F_{phi r} = B sin r.
double field_strength(const FieldConfig& cfg, double r);

// max |e_(a)^mu e_(b)^nu g_{mu nu} - eta_{ab}| at one point.
double tetrad_orthonormality_residual(double r, double z);

// max |nabla_lambda g_{mu nu}| over spatial indices, closed-form Christoffels.
double metric_compatibility_residual(double r, double z);

}  // namespace dkps3::geometry
