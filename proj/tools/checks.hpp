#pragma once

// Composite runtime checks behind `geometry-check` and `verify-all`. These are
// the CLI-facing counterparts of the test-suite oracles (the test suite keeps
// its own independent implementations).

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "dkps3/algebra.hpp"
#include "dkps3/geometry.hpp"
#include "dkps3/radial.hpp"
#include "dkps3/zsystem.hpp"

namespace dkps3::cli {

// Pinned uniform in [lo, hi): bit generation fixed by mt19937, no
// distribution-object variability.
inline double pinned_uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
  return lo + u * (hi - lo);
}

// Central-difference Christoffels from the metric vs the closed forms.
inline double christoffel_fd_residual(double r, double z, double h) {
  using namespace dkps3::geometry;
  const std::array<int, 3> coord{kR, kPhi, kZ};
  auto dg = [&](int lam, int mu, int nu) {
    Eigen::Matrix4d gp, gm;
    if (coord[lam] == kR) {
      gp = metric(r + h, z);
      gm = metric(r - h, z);
    } else if (coord[lam] == kZ) {
      gp = metric(r, z + h);
      gm = metric(r, z - h);
    } else {
      return 0.0;
    }
    return (gp(coord[mu], coord[nu]) - gm(coord[mu], coord[nu])) / (2.0 * h);
  };

  const Eigen::Matrix4d ginv = metric_inverse(r, z);
  const ConnectionData closed = christoffel_closed_form(r, z);
  double worst = 0.0;
  for (int lam = 0; lam < 3; ++lam)
    for (int mu = 0; mu < 3; ++mu)
      for (int nu = 0; nu < 3; ++nu) {
        const double fd = 0.5 * ginv(coord[lam], coord[lam]) *
                          (dg(mu, nu, lam) + dg(nu, mu, lam) - dg(lam, mu, nu));
        worst = std::max(worst, std::abs(fd - closed.christoffel[lam][mu][nu]));
      }
  return worst;
}

inline double field_strength_fd_residual(const geometry::FieldConfig& cfg, double r, double h) {
  const double fd = -(cfg.a_phi(r + h) - cfg.a_phi(r - h)) / (2.0 * h);
  return std::abs(fd - geometry::field_strength(cfg, r));
}

// Relative residual of the hypergeometric-variable ODE
//   y(1-y) R'' + (1-2y) R' - (1/4)(m^2/y - 4B^2 + (m+2B)^2/(1-y)) R + (B+2lambda) R = 0
// with 4th-order central stencils on a uniform y-grid; sup over the interior
// window [0.1, 0.9]. Stencils run in long double: at h ~ 5e-4 the double
// second difference already amplifies roundoff past the 1e-8 target.
inline double ode_residual_y(const radial::RadialSolution<double>& sol, int points,
                             double window_lo = 0.1, double window_hi = 0.9) {
  using ld = long double;
  const int K = points;
  const ld h = 1.0L / (K + 1);
  std::vector<ld> y(K), R(K);
  for (int j = 0; j < K; ++j) {
    y[j] = (j + 1) * h;
    ld poly = 0.0L;
    for (auto it = sol.poly_coeffs.rbegin(); it != sol.poly_coeffs.rend(); ++it)
      poly = poly * y[j] + static_cast<ld>(*it);
    R[j] = std::pow(y[j], static_cast<ld>(sol.a_r)) *
           std::pow(1.0L - y[j], static_cast<ld>(sol.b_r)) * poly;
  }
  ld sup = 0.0L;
  for (ld v : R) sup = std::max(sup, std::abs(v));
  for (ld& v : R) v /= sup;

  const ld m = sol.m, B = sol.B;
  ld worst = 0.0L;
  for (int j = 2; j + 2 < K; ++j) {
    if (y[j] < window_lo || y[j] > window_hi) continue;
    const ld d2 = (-R[j - 2] + 16 * R[j - 1] - 30 * R[j] + 16 * R[j + 1] - R[j + 2]) /
                  (12 * h * h);
    const ld d1 = (R[j - 2] - 8 * R[j - 1] + 8 * R[j + 1] - R[j + 2]) / (12 * h);
    const ld t1 = y[j] * (1.0L - y[j]) * d2;
    const ld t2 = (1.0L - 2.0L * y[j]) * d1;
    const ld t3 =
        -0.25L * (m * m / y[j] - 4.0L * B * B + (m + 2.0L * B) * (m + 2.0L * B) / (1.0L - y[j])) *
        R[j];
    const ld t4 = (B + 2.0L * static_cast<ld>(sol.lambda)) * R[j];
    const ld scale = std::max<ld>(1.0L, std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4));
    worst = std::max(worst, std::abs(t1 + t2 + t3 + t4) / scale);
  }
  return static_cast<double>(worst);
}

// Decoupled-case (lambda = lambda' = 0) analytic spectrum: channels Z1/Z3
// contribute (k+1)^2 each, Z2bar contributes (k+1)(k+3).
inline std::vector<double> decoupled_oracle(int count) {
  std::vector<double> v;
  for (int k = 0; v.size() < static_cast<std::size_t>(count) + 4; ++k) {
    v.push_back((k + 1.0) * (k + 1.0));
    v.push_back((k + 1.0) * (k + 1.0));
    v.push_back((k + 1.0) * (k + 3.0));
  }
  std::sort(v.begin(), v.end());
  v.resize(count);
  return v;
}

// Cubic sampling residual: max over samples of the scaled polynomial residual
// of every root, plus Vieta and triple-angle defects.
struct CubicSampleReport {
  double max_poly_residual = 0.0;
  double max_vieta = 0.0;
  double max_triple_angle = 0.0;
  double max_b0_root_gap = 0.0;  // distance of nearest root to Lambda at B=0
  int inequality_violations = 0; // |p| > |q| failures (recorded, not failed)
  std::string first_violation;
};

inline CubicSampleReport sample_cubics(int samples, unsigned seed) {
  std::mt19937_64 rng(seed);
  CubicSampleReport rep;
  for (int it = 0; it < samples; ++it) {
    const double Lambda = pinned_uniform(rng, 0.0, 20.0);
    const double B = pinned_uniform(rng, -3.0, 3.0);
    const auto spec = zsystem::indicial_cubic(Lambda, B);
    for (const auto& root : spec.roots) {
      const std::complex<double> A = root;
      const auto res = ((A + spec.a_c) * A + spec.b_c) * A + spec.c_c;
      const double scale = std::max(1.0, std::pow(std::abs(A), 3.0));
      rep.max_poly_residual = std::max(rep.max_poly_residual, std::abs(res) / scale);
    }
    // Vieta on the depressed roots Y = A - shift.
    const double shift = spec.Lambda + 1.0 / 3.0;
    const std::complex<double> y1 = spec.roots[0] - shift, y2 = spec.roots[1] - shift,
                               y3 = spec.roots[2] - shift;
    const double vscale = std::max(1.0, std::abs(spec.p)) + std::abs(spec.q);
    rep.max_vieta = std::max({rep.max_vieta, std::abs(y1 + y2 + y3) / vscale,
                              std::abs(y1 * y2 + y1 * y3 + y2 * y3 - spec.p) / vscale,
                              std::abs(-y1 * y2 * y3 - spec.q) / vscale});
    if (spec.branch == zsystem::CubicBranch::TrigThreeReal) {
      const double c3 = std::cos(spec.phi / 3.0);
      rep.max_triple_angle = std::max(
          rep.max_triple_angle, std::abs((4.0 * c3 * c3 - 3.0) * c3 - std::cos(spec.phi)));
    }
    if (!(std::abs(spec.p) > std::abs(spec.q))) {
      if (rep.inequality_violations == 0) {
        rep.first_violation = "Lambda=" + std::to_string(Lambda) + " B=" + std::to_string(B) +
                              " |p|=" + std::to_string(std::abs(spec.p)) +
                              " |q|=" + std::to_string(std::abs(spec.q));
      }
      ++rep.inequality_violations;
    }
    // B = 0 always has A = Lambda as a root.
    const auto spec0 = zsystem::indicial_cubic(Lambda, 0.0);
    double gap = std::numeric_limits<double>::max();
    for (const auto& root : spec0.roots) gap = std::min(gap, std::abs(root - Lambda));
    rep.max_b0_root_gap =
        std::max(rep.max_b0_root_gap, gap / std::max(1.0, std::abs(Lambda)));
  }
  return rep;
}

}  // namespace dkps3::cli
