#include "dkps3/radial.hpp"

#include <algorithm>
#include <cmath>

namespace dkps3::radial {

namespace {
constexpr double kGamma = 0.70710678118654752440;  // 1/sqrt(2)
}

int derivative_sign(Ladder op) {
  switch (op) {
    case Ladder::AMinus:
    case Ladder::A:
    case Ladder::APlus: return 1;
    default: return -1;
  }
}

int cosine_shift(Ladder op) {
  switch (op) {
    case Ladder::AMinus:
    case Ladder::BMinus: return -1;
    case Ladder::APlus:
    case Ladder::BPlus: return 1;
    default: return 0;
  }
}

double LadderOperators::coefficient(Ladder op, double r) const {
  return (cfg.nu(r) + cosine_shift(op) * std::cos(r)) / std::sin(r);
}

std::vector<double> LadderOperators::apply(Ladder op, const std::vector<double>& f, double r0,
                                           double h) const {
  if (f.size() < 3) throw std::invalid_argument("LadderOperators::apply: need >= 3 samples");
  const double sd = derivative_sign(op);
  std::vector<double> out(f.size() - 2);
  for (std::size_t j = 1; j + 1 < f.size(); ++j) {
    const double r = r0 + static_cast<double>(j) * h;
    const double df = (f[j + 1] - f[j - 1]) / (2.0 * h);
    out[j - 1] = kGamma * (sd * df + coefficient(op, r) * f[j]);
  }
  return out;
}

LadderOperators make_operators(const geometry::FieldConfig& cfg) { return LadderOperators{cfg}; }

RadialSolution<double> to_double(const RadialSolution<Rational>& sol) {
  RadialSolution<double> d;
  d.m = sol.m;
  d.B = sol.B.value();
  d.n = sol.n;
  d.a_r = sol.a_r.value();
  d.b_r = sol.b_r.value();
  d.alpha = sol.alpha.value();
  d.beta = sol.beta.value();
  d.gamma_h = sol.gamma_h.value();
  d.lambda = sol.lambda.value();
  d.lambda_prime = sol.lambda_prime.value();
  d.Lambda = sol.Lambda.value();
  d.N = sol.N.value();
  d.poly_coeffs.reserve(sol.poly_coeffs.size());
  for (const auto& c : sol.poly_coeffs) d.poly_coeffs.push_back(c.value());
  return d;
}

std::vector<double> radial_wavefunction(const RadialSolution<double>& sol,
                                        const std::vector<double>& r_grid) {
  std::vector<double> R(r_grid.size());
  for (std::size_t j = 0; j < r_grid.size(); ++j) {
    const double r = r_grid[j];
    const double y = std::sin(r / 2.0) * std::sin(r / 2.0);
    const double pre = std::pow(std::sin(r / 2.0), 2.0 * sol.a_r) *
                       std::pow(std::cos(r / 2.0), 2.0 * sol.b_r);
    R[j] = pre * polynomial_value(sol, y);
  }
  double sup = 0.0;
  for (double v : R) sup = std::max(sup, std::abs(v));
  if (!(sup > 1e-280))
    throw std::range_error("radial_wavefunction: prefactor underflows on the whole grid");
  for (double& v : R) v /= sup;
  return R;
}

EigenRelationReport verify_eigenrelation(const RadialSolution<double>& sol, double h,
                                         double window) {
  const LadderOperators ops = make_operators({sol.B, sol.m});
  const int count = static_cast<int>(std::floor(M_PI / h)) - 1;
  if (count < 8) throw std::invalid_argument("verify_eigenrelation: step too coarse");
  std::vector<double> grid(count);
  for (int j = 0; j < count; ++j) grid[j] = static_cast<double>(j + 1) * h;

  const std::vector<double> R = radial_wavefunction(sol, grid);
  // First application is valid from grid index 1, second from index 2.
  const std::vector<double> aR = ops.apply(Ladder::A, R, grid.front(), h);
  const std::vector<double> ba = ops.apply(Ladder::BMinus, aR, grid[1], h);
  const std::vector<double> bR = ops.apply(Ladder::B, R, grid.front(), h);
  const std::vector<double> ab = ops.apply(Ladder::APlus, bR, grid[1], h);

  EigenRelationReport rep;
  rep.lambda = sol.lambda;
  rep.lambda_prime = sol.lambda_prime;
  double supR = 0.0;
  for (double v : R) supR = std::max(supR, std::abs(v));
  for (std::size_t j = 0; j < ba.size(); ++j) {
    const double r = grid[j + 2];
    if (r < window || r > M_PI - window) continue;
    rep.resid_lambda = std::max(rep.resid_lambda, std::abs(ba[j] - sol.lambda * R[j + 2]));
    rep.resid_lambda_prime =
        std::max(rep.resid_lambda_prime, std::abs(ab[j] - sol.lambda_prime * R[j + 2]));
  }
  rep.resid_lambda /= supR;
  rep.resid_lambda_prime /= supR;
  return rep;
}

double discretized_ground_eigenvalue(const geometry::FieldConfig& cfg, int points) {
  if (points < 8) throw std::invalid_argument("discretized_ground_eigenvalue: need >= 8 points");
  const int K = points;
  const double h = M_PI / (K + 1);

  // b-_ a^ = (1/2)(-d^2/dr^2 - cot r d/dr - B + nu^2/sin^2 r), Dirichlet ends.
  std::vector<double> diag(K), upper(K - 1), lower(K - 1);
  for (int j = 0; j < K; ++j) {
    const double r = (j + 1) * h;
    const double cot = std::cos(r) / std::sin(r);
    const double nu = cfg.nu(r);
    diag[j] = 0.5 * (2.0 / (h * h) - cfg.B + nu * nu / (std::sin(r) * std::sin(r)));
    if (j + 1 < K) upper[j] = 0.5 * (-1.0 / (h * h) - cot / (2.0 * h));
    if (j > 0) lower[j - 1] = 0.5 * (-1.0 / (h * h) + cot / (2.0 * h));
  }

  // Similar to a symmetric tridiagonal with off-diagonals sqrt(u_j l_j).
  std::vector<double> off(K - 1);
  for (int j = 0; j + 1 < K; ++j) {
    const double prod = upper[j] * lower[j];
    if (!(prod > 0.0))
      throw std::runtime_error("discretized_ground_eigenvalue: symmetrizability lost");
    off[j] = std::sqrt(prod);
  }

  auto count_below = [&](double t) {
    int count = 0;
    double d = diag[0] - t;
    if (d < 0.0) ++count;
    for (int j = 1; j < K; ++j) {
      const double denom = (d == 0.0) ? 1e-300 : d;
      d = diag[j] - t - off[j - 1] * off[j - 1] / denom;
      if (d < 0.0) ++count;
    }
    return count;
  };

  double lo = diag[0], hi = diag[0];
  for (int j = 0; j < K; ++j) {
    const double radius =
        (j > 0 ? off[j - 1] : 0.0) + (j + 1 < K ? off[j] : 0.0);
    lo = std::min(lo, diag[j] - radius);
    hi = std::max(hi, diag[j] + radius);
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (count_below(mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> uniform_open_grid(double lo, double hi, int count) {
  std::vector<double> g(count);
  const double h = (hi - lo) / (count + 1);
  for (int j = 0; j < count; ++j) g[j] = lo + (j + 1) * h;
  return g;
}

}  // namespace dkps3::radial
