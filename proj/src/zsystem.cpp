#include "dkps3/zsystem.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

namespace dkps3::zsystem {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using cd = std::complex<double>;

constexpr double kSqrt3 = 1.7320508075688772935;

// Channel layout: c = 0 -> Z1, c = 1 -> Z2bar, c = 2 -> Z3. After the
// substitution Z_c = (1-x^2)^{a_c} u_c the operators read
//   L_c u = -(1-x^2) u'' + (4 a_c + 1) x u' + (4 a_c^2 - sigma_c) u + coupling,
// with sigma = (0, 1, 0) and diagonal (multiplication) coupling blocks.
struct Assembled {
  int K = 0;
  double h = 0.0;
  std::vector<double> x;
  SpMat L;
};

Assembled assemble(double lambda, double lambda_prime, const std::array<double, 3>& a, int K) {
  Assembled out;
  out.K = K;
  out.h = 2.0 / (K + 1);
  out.x.resize(K);
  for (int j = 0; j < K; ++j) out.x[j] = -1.0 + (j + 1) * out.h;

  const std::array<double, 3> sigma{0.0, 1.0, 0.0};
  const double h = out.h;
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(K) * 15);

  auto idx = [](int j, int c) { return 3 * j + c; };  // j is 0-based node index here

  for (int j = 0; j < K; ++j) {
    const double x = out.x[j];
    const double s = 1.0 - x * x;
    for (int c = 0; c < 3; ++c) {
      const double ac = a[c];
      const int row = idx(j, c);
      trip.emplace_back(row, row, 2.0 * s / (h * h) + 4.0 * ac * ac - sigma[c]);
      const double right = -s / (h * h) + (4.0 * ac + 1.0) * x / (2.0 * h);
      const double left = -s / (h * h) - (4.0 * ac + 1.0) * x / (2.0 * h);
      if (j + 1 < K)
        trip.emplace_back(row, idx(j + 1, c), right);
      else  // ghost at x = +1, cubic extrapolation u_g = 3u_K - 3u_{K-1} + u_{K-2}
        for (auto [off, w] : {std::pair{0, 3.0}, {1, -3.0}, {2, 1.0}})
          trip.emplace_back(row, idx(j - off, c), right * w);
      if (j > 0)
        trip.emplace_back(row, idx(j - 1, c), left);
      else  // ghost at x = -1
        for (auto [off, w] : {std::pair{0, 3.0}, {1, -3.0}, {2, 1.0}})
          trip.emplace_back(row, idx(j + off, c), left * w);
    }
    // diagonal coupling blocks
    if (lambda != 0.0)
      trip.emplace_back(idx(j, 0), idx(j, 1), -2.0 * lambda * x * std::pow(s, a[1] - a[0] - 1.0));
    trip.emplace_back(idx(j, 1), idx(j, 0), -2.0 * x * std::pow(s, a[0] - a[1] - 1.0));
    trip.emplace_back(idx(j, 1), idx(j, 2), -2.0 * x * std::pow(s, a[2] - a[1] - 1.0));
    if (lambda_prime != 0.0)
      trip.emplace_back(idx(j, 2), idx(j, 1),
                        -2.0 * lambda_prime * x * std::pow(s, a[1] - a[2] - 1.0));
  }

  out.L.resize(3 * K, 3 * K);
  out.L.setFromTriplets(trip.begin(), trip.end());
  out.L.makeCompressed();
  return out;
}

std::vector<cd> sorted_eigenvalues(const Eigen::VectorXcd& ev) {
  std::vector<cd> v(ev.data(), ev.data() + ev.size());
  std::sort(v.begin(), v.end(), [](const cd& a, const cd& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return v;
}

bool acceptably_real(const cd& z, double imag_tol) {
  return std::abs(z.imag()) <= imag_tol * std::max(1.0, std::abs(z.real()));
}

// Mirror action (Z1, Z2bar, Z3)(x) -> (Z3(-x), -Z2bar(-x), Z1(-x)) on the
// interleaved u-vector; valid when a[0] == a[2] (lambda == lambda').
VectorXd apply_parity(const VectorXd& v, int K) {
  VectorXd out(v.size());
  for (int j = 0; j < K; ++j) {
    const int mj = K - 1 - j;
    out[3 * j + 0] = v[3 * mj + 2];
    out[3 * j + 1] = -v[3 * mj + 1];
    out[3 * j + 2] = v[3 * mj + 0];
  }
  return out;
}

// Replace the basis of each degenerate cluster by parity eigenvectors.
void parity_symmetrize(std::vector<double>& vals, MatrixXd& vecs, int K, double cluster_tol) {
  const int m = static_cast<int>(vals.size());
  int i = 0;
  while (i < m) {
    int j = i + 1;
    while (j < m && std::abs(vals[j] - vals[j - 1]) <= cluster_tol * std::max(1.0, std::abs(vals[j])))
      ++j;
    const int d = j - i;
    MatrixXd block = vecs.middleCols(i, d);
    Eigen::HouseholderQR<MatrixXd> qr(block);
    MatrixXd Q = qr.householderQ() * MatrixXd::Identity(block.rows(), d);
    MatrixXd PQ(block.rows(), d);
    for (int k = 0; k < d; ++k) PQ.col(k) = apply_parity(Q.col(k), K);
    MatrixXd C = Q.transpose() * PQ;
    C = 0.5 * (C + C.transpose().eval());
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(C);
    vecs.middleCols(i, d) = Q * es.eigenvectors();
    i = j;
  }
}

struct RitzSet {
  std::vector<double> values;   // accepted (real) Ritz values, ascending
  MatrixXd vectors;             // matching real vectors
  std::vector<double> residuals;
  std::vector<cd> rejected;     // complex Ritz values beyond the guard
  bool converged = false;
  int iterations = 0;
};

// Block shift-invert subspace iteration for the eigenvalues of L nearest
// (i.e. just above) sigma.
RitzSet shift_invert_lowest(const SpMat& L, int nev, double sigma, const ZSolveOptions& opt,
                            const MatrixXd& V0) {
  const int N = static_cast<int>(L.rows());
  const int b = std::min(N, nev + opt.block_extra);

  SpMat A = L;
  Eigen::SparseLU<SpMat> lu;
  for (int attempt = 0;; ++attempt) {
    SpMat shifted = A;
    for (int k = 0; k < N; ++k) shifted.coeffRef(k, k) -= sigma;
    lu.compute(shifted);
    if (lu.info() == Eigen::Success) break;
    if (attempt >= 5) throw std::runtime_error("z eigensolver: shifted factorization failed");
    sigma -= 0.7 * (1.0 + std::abs(sigma));
  }

  std::mt19937 rng(0x5eed);
  auto uniform = [&rng]() { return (rng() >> 8) * (1.0 / 16777216.0) - 0.5; };
  MatrixXd V(N, b);
  for (int c = 0; c < b; ++c) {
    if (c < V0.cols() && V0.col(c).norm() > 0)
      V.col(c) = V0.col(c);
    else
      for (int r = 0; r < N; ++r) V(r, c) = uniform();
  }

  RitzSet out;
  MatrixXd Q, LQ, H, Rm;
  Eigen::MatrixXcd Y;
  Eigen::VectorXcd theta;
  double prev_worst = std::numeric_limits<double>::max();
  int stall = 0;

  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    MatrixXd W = lu.solve(V);
    for (int c = 0; c < b; ++c)
      if (!(W.col(c).norm() > 1e-280))
        for (int r = 0; r < N; ++r) W(r, c) = uniform();
    Eigen::HouseholderQR<MatrixXd> qr(W);
    Q = qr.householderQ() * MatrixXd::Identity(N, b);
    LQ = L * Q;
    H = Q.transpose() * LQ;
    Eigen::EigenSolver<MatrixXd> es(H, true);
    theta = es.eigenvalues();
    Y = es.eigenvectors();
    Rm = LQ - Q * H;

    std::vector<int> order(b);
    for (int k = 0; k < b; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](int u, int v) {
      if (theta[u].real() != theta[v].real()) return theta[u].real() < theta[v].real();
      return theta[u].imag() < theta[v].imag();
    });

    double worst = 0.0;
    int counted = 0;
    for (int k = 0; k < b && counted < nev; ++k) {
      const cd th = theta[order[k]];
      if (!acceptably_real(th, opt.imag_tol)) continue;
      const double res = (Rm * Y.col(order[k])).norm() / std::max(1.0, std::abs(th.real()));
      worst = std::max(worst, res);
      ++counted;
    }
    out.iterations = iter + 1;
    if (counted >= std::min(nev, b) && worst < opt.residual_tol) {
      out.converged = true;
      break;
    }
    if (worst >= prev_worst * 0.999) {
      if (++stall > 12) break;
    } else {
      stall = 0;
    }
    prev_worst = std::min(prev_worst, worst);
    V = Q;
  }

  // Final extraction from the last Ritz decomposition.
  std::vector<int> order(b);
  for (int k = 0; k < b; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](int u, int v) {
    if (theta[u].real() != theta[v].real()) return theta[u].real() < theta[v].real();
    return theta[u].imag() < theta[v].imag();
  });

  std::vector<VectorXd> kept;
  for (int k = 0; k < b; ++k) {
    const cd th = theta[order[k]];
    if (!acceptably_real(th, opt.imag_tol)) {
      out.rejected.push_back(th);
      continue;
    }
    Eigen::VectorXcd xc = Q * Y.col(order[k]);
    VectorXd xr = xc.real();
    if (xr.norm() < 0.5 * xc.norm()) continue;  // genuinely complex direction
    xr.normalize();
    out.values.push_back(th.real());
    out.residuals.push_back((Rm * Y.col(order[k])).norm() / std::max(1.0, std::abs(th.real())));
    kept.push_back(std::move(xr));
  }
  out.vectors.resize(N, static_cast<int>(kept.size()));
  for (int k = 0; k < static_cast<int>(kept.size()); ++k) out.vectors.col(k) = kept[k];
  return out;
}

// Linear interpolation of an interleaved 3-channel vector between grids.
MatrixXd interpolate_block(const std::vector<double>& xc, const MatrixXd& Vc,
                           const std::vector<double>& xf) {
  const int Kc = static_cast<int>(xc.size());
  const int Kf = static_cast<int>(xf.size());
  MatrixXd Vf(3 * Kf, Vc.cols());
  for (int col = 0; col < Vc.cols(); ++col) {
    for (int j = 0; j < Kf; ++j) {
      const double x = xf[j];
      int i1 = static_cast<int>(std::lower_bound(xc.begin(), xc.end(), x) - xc.begin());
      i1 = std::clamp(i1, 1, Kc - 1);
      const int i0 = i1 - 1;
      const double t = (x - xc[i0]) / (xc[i1] - xc[i0]);
      for (int c = 0; c < 3; ++c)
        Vf(3 * j + c, col) =
            (1.0 - t) * Vc(3 * i0 + c, col) + t * Vc(3 * i1 + c, col);
    }
  }
  return Vf;
}

double nearest_value(const std::vector<double>& vals, double target) {
  double best = std::numeric_limits<double>::quiet_NaN();
  double dist = std::numeric_limits<double>::max();
  for (double v : vals) {
    const double d = std::abs(v - target);
    if (d < dist) {
      dist = d;
      best = v;
    }
  }
  return best;
}

}  // namespace

std::string branch_name(CubicBranch b) {
  switch (b) {
    case CubicBranch::TrigThreeReal: return "trig-three-real";
    case CubicBranch::CardanoOneReal: return "cardano-one-real";
    case CubicBranch::DepressedCubeRoot: return "depressed-cube-root";
  }
  return "unknown";
}

IndicialSpectrum indicial_cubic(double Lambda, double B) {
  IndicialSpectrum s;
  s.Lambda = Lambda;
  s.B = B;
  s.lambda = Lambda - 0.5 * B;
  s.lambda_prime = Lambda + 0.5 * B;
  s.a_c = -(3.0 * Lambda + 1.0);
  s.b_c = 3.0 * Lambda * Lambda - 0.25 * B * B;
  s.c_c = -(Lambda * Lambda - 0.25 * B * B) * (Lambda - 1.0);
  s.p = s.b_c - s.a_c * s.a_c / 3.0;
  s.q = 2.0 * s.a_c * s.a_c * s.a_c / 27.0 - s.a_c * s.b_c / 3.0 + s.c_c;

  const double shift = -s.a_c / 3.0;  // = Lambda + 1/3
  std::array<cd, 3> y;
  const double pscale = std::max(1.0, std::cbrt(std::abs(s.q) * std::abs(s.q)));
  if (std::abs(s.p) <= 1e-13 * pscale) {
    s.branch = CubicBranch::DepressedCubeRoot;
    const double y1 = std::cbrt(-s.q);
    y[0] = y1;
    y[1] = y1 * cd(-0.5, kSqrt3 / 2.0);
    y[2] = y1 * cd(-0.5, -kSqrt3 / 2.0);
    s.all_real = (y1 == 0.0);
  } else {
    const double disc = 0.25 * s.q * s.q + s.p * s.p * s.p / 27.0;
    if (disc <= 0.0) {
      s.branch = CubicBranch::TrigThreeReal;
      const double mroot = std::sqrt(-s.p / 3.0);
      const double carg = std::clamp((-0.5 * s.q) / (mroot * mroot * mroot), -1.0, 1.0);
      s.phi = std::acos(carg);
      const double c3 = std::cos(s.phi / 3.0), s3 = std::sin(s.phi / 3.0);
      y[0] = mroot * 2.0 * c3;
      y[1] = mroot * (-c3 - kSqrt3 * s3);
      y[2] = mroot * (-c3 + kSqrt3 * s3);
      s.all_real = true;
    } else {
      s.branch = CubicBranch::CardanoOneReal;
      const double sd = std::sqrt(disc);
      const double alpha = std::cbrt(-0.5 * s.q + sd);
      const double beta = std::cbrt(-0.5 * s.q - sd);
      y[0] = alpha + beta;
      y[1] = cd(-0.5 * (alpha + beta), 0.5 * kSqrt3 * (alpha - beta));
      y[2] = cd(-0.5 * (alpha + beta), -0.5 * kSqrt3 * (alpha - beta));
      s.all_real = std::abs(alpha - beta) <= 1e-14 * std::max(1.0, std::abs(alpha));
    }
  }
  for (int k = 0; k < 3; ++k) s.roots[k] = y[k] + shift;
  // Newton polish against the monic cubic; skipped near multiple roots where
  // the derivative degenerates (the closed-form value is already adequate).
  for (auto& A : s.roots) {
    for (int it = 0; it < 2; ++it) {
      const cd val = ((A + s.a_c) * A + s.b_c) * A + s.c_c;
      const cd der = (3.0 * A + 2.0 * s.a_c) * A + s.b_c;
      if (std::abs(der) < 1e-8 * std::max(1.0, std::abs(A) * std::abs(A))) break;
      A -= val / der;
    }
    if (std::abs(A.imag()) <= 1e-14 * std::max(1.0, std::abs(A.real()))) A = cd(A.real(), 0.0);
  }
  std::sort(s.roots.begin(), s.roots.end(), [](const cd& u, const cd& v) {
    if (u.real() != v.real()) return u.real() < v.real();
    return u.imag() < v.imag();
  });
  return s;
}

ExponentPair frobenius_exponents(double A) {
  ExponentPair e;
  const double disc = 1.0 + 8.0 * A;
  if (disc < 0.0) {
    e.oscillatory = true;
    const double im = std::sqrt(-disc) / 4.0;
    e.regular_c = cd(0.25, im);
    e.singular_c = cd(0.25, -im);
    e.regular = e.singular = std::numeric_limits<double>::quiet_NaN();
    return e;
  }
  const double root = std::sqrt(disc);
  e.regular = (1.0 + root) / 4.0;
  e.singular = (1.0 - root) / 4.0;
  e.regular_c = e.regular;
  e.singular_c = e.singular;
  return e;
}

std::array<ExponentPair, 3> frobenius_exponents(const IndicialSpectrum& spec) {
  std::array<ExponentPair, 3> out;
  for (int k = 0; k < 3; ++k) {
    if (std::abs(spec.roots[k].imag()) > 1e-12 * std::max(1.0, std::abs(spec.roots[k].real()))) {
      out[k].oscillatory = true;
      out[k].regular = out[k].singular = std::numeric_limits<double>::quiet_NaN();
    } else {
      out[k] = frobenius_exponents(spec.roots[k].real());
    }
  }
  return out;
}

AmplitudeRatios amplitude_ratios(const IndicialSpectrum& spec, int root_index) {
  if (root_index < 0 || root_index > 2)
    throw std::out_of_range("amplitude_ratios: root_index must be 0..2");
  AmplitudeRatios r;
  const cd root = spec.roots[root_index];
  if (std::abs(root.imag()) > 1e-12 * std::max(1.0, std::abs(root.real()))) {
    r.complex_root = true;
    r.a1_over_a2 = r.a3_over_a2 = r.b1_over_b2 = r.b3_over_b2 =
        std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  const double A = root.real();
  const double l = spec.lambda, lp = spec.lambda_prime;
  const double scale = std::max({1.0, std::abs(l), std::abs(lp)});
  if (std::abs(l - A) <= 1e-10 * scale || std::abs(lp - A) <= 1e-10 * scale) {
    r.degenerate = true;  // linear system forces A2 = 0; separate solution family
    r.a1_over_a2 = r.a3_over_a2 = std::numeric_limits<double>::infinity();
    r.b1_over_b2 = r.b3_over_b2 = std::numeric_limits<double>::infinity();
    return r;
  }
  r.a1_over_a2 = l / (l - A);
  r.a3_over_a2 = lp / (lp - A);
  r.b1_over_b2 = -r.a1_over_a2;
  r.b3_over_b2 = -r.a3_over_a2;
  return r;
}

double endpoint_slope_fit(const std::vector<double>& x, const std::vector<double>& Z, int sign,
                          double lo, double hi) {
  Eigen::Matrix3d M = Eigen::Matrix3d::Zero();
  Eigen::Vector3d rhs = Eigen::Vector3d::Zero();
  int count = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double d = 1.0 - sign * x[j];
    if (d < lo || d > hi) continue;
    const double az = std::abs(Z[j]);
    if (!(az > 1e-280)) continue;
    const Eigen::Vector3d reg(1.0, std::log(d), d);
    M += reg * reg.transpose();
    rhs += reg * std::log(az);
    ++count;
  }
  if (count < 4) return std::numeric_limits<double>::quiet_NaN();
  return M.ldlt().solve(rhs)[1];
}

std::vector<ZEigenSolution> solve_z_eigenproblem(double lambda, double B, int grid_size, int nev,
                                                 const ZSolveOptions& opt) {
  if (grid_size < 16) throw std::invalid_argument("solve_z_eigenproblem: grid too small");
  if (nev < 1) throw std::invalid_argument("solve_z_eigenproblem: nev must be positive");

  const double lambda_prime = lambda + B;
  const double Lambda = lambda + 0.5 * B;
  const std::array<double, 3> Avals{lambda, 1.0 + Lambda, lambda_prime};
  std::array<double, 3> a{};
  for (int c = 0; c < 3; ++c) {
    const ExponentPair ep = frobenius_exponents(Avals[c]);
    if (ep.oscillatory)
      throw std::domain_error(
          "solve_z_eigenproblem: oscillatory endpoint (complex indicial exponents)");
    a[c] = ep.regular;
  }
  const bool symmetric = opt.parity_symmetrize && lambda == lambda_prime;

  std::vector<int> grids;
  for (int l = 0; l <= opt.refinements; ++l) grids.push_back(grid_size << l);

  // Dense bootstrap on a coarse grid for shift and start vectors.
  const int K0 = std::min(opt.coarse_grid, grids.front());
  const Assembled coarse = assemble(lambda, lambda_prime, a, K0);
  Eigen::EigenSolver<MatrixXd> es(MatrixXd(coarse.L), true);
  const std::vector<cd> coarse_vals = sorted_eigenvalues(es.eigenvalues());
  std::vector<double> hints;
  MatrixXd hint_vecs(3 * K0, 0);
  {
    std::vector<int> order;
    for (int k = 0; k < es.eigenvalues().size(); ++k) order.push_back(k);
    std::sort(order.begin(), order.end(), [&](int u, int v) {
      return es.eigenvalues()[u].real() < es.eigenvalues()[v].real();
    });
    const int want = nev + opt.block_extra;
    hint_vecs.resize(3 * K0, want);
    int made = 0;
    for (int k : order) {
      if (made >= want) break;
      if (!acceptably_real(es.eigenvalues()[k], opt.imag_tol)) continue;
      hints.push_back(es.eigenvalues()[k].real());
      hint_vecs.col(made++) = es.eigenvectors().col(k).real();
    }
    hint_vecs.conservativeResize(3 * K0, made);
  }
  double sigma = hints.empty() ? -1.0 : hints.front() - std::max(1.0, 0.05 * std::abs(hints.front()));

  std::vector<std::vector<double>> per_grid_values;
  std::vector<double> prev_x = coarse.x;
  MatrixXd prev_vecs = hint_vecs;
  Assembled finest;
  RitzSet finest_ritz;

  for (std::size_t g = 0; g < grids.size(); ++g) {
    Assembled asmb = assemble(lambda, lambda_prime, a, grids[g]);
    const MatrixXd V0 = interpolate_block(prev_x, prev_vecs, asmb.x);
    RitzSet ritz = shift_invert_lowest(asmb.L, nev, sigma, opt, V0);
    if (symmetric && ritz.vectors.cols() > 0)
      parity_symmetrize(ritz.values, ritz.vectors, asmb.K, opt.cluster_tol);
    per_grid_values.push_back(ritz.values);
    prev_x = asmb.x;
    prev_vecs = ritz.vectors;
    if (g + 1 == grids.size()) {
      finest = std::move(asmb);
      finest_ritz = std::move(ritz);
    }
  }

  const int found = static_cast<int>(finest_ritz.values.size());
  std::vector<ZEigenSolution> out;
  for (int k = 0; k < std::min(nev, found); ++k) {
    ZEigenSolution sol;
    sol.lambda = lambda;
    sol.lambda_prime = lambda_prime;
    sol.Lambda = Lambda;
    sol.B = B;
    sol.index = k;
    sol.eps2M = finest_ritz.values[k];
    sol.channel_exponent = a;
    sol.x = finest.x;

    const VectorXd& v = finest_ritz.vectors.col(k);
    const int K = finest.K;
    sol.Z1.resize(K);
    sol.Z2bar.resize(K);
    sol.Z3.resize(K);
    for (int j = 0; j < K; ++j) {
      const double s = 1.0 - finest.x[j] * finest.x[j];
      sol.Z1[j] = std::pow(s, a[0]) * v[3 * j + 0];
      sol.Z2bar[j] = std::pow(s, a[1]) * v[3 * j + 1];
      sol.Z3[j] = std::pow(s, a[2]) * v[3 * j + 2];
    }
    // Normalize: overall sup = 1, largest-magnitude sample positive.
    double sup = 0.0;
    const std::array<const std::vector<double>*, 3> chans{&sol.Z1, &sol.Z2bar, &sol.Z3};
    for (const auto* ch : chans)
      for (double val : *ch) sup = std::max(sup, std::abs(val));
    double at_sup = 0.0;
    for (const auto* ch : chans)
      for (double val : *ch)
        if (std::abs(val) == sup) at_sup = val;
    const double scale = (sup > 0.0) ? (at_sup >= 0.0 ? 1.0 / sup : -1.0 / sup) : 1.0;
    for (auto* ch : {&sol.Z1, &sol.Z2bar, &sol.Z3})
      for (double& val : *ch) val *= scale;

    // Endpoint fits over the last decade before each boundary.
    const double lo = opt.fit_window_lo * finest.h;
    const double hi = 10.0 * opt.fit_window_lo * finest.h;
    int dominant = 0;
    double dom_sup = 0.0;
    for (int c = 0; c < 3; ++c) {
      double ch_sup = 0.0;
      for (double val : *chans[c]) ch_sup = std::max(ch_sup, std::abs(val));
      if (ch_sup > dom_sup) {
        dom_sup = ch_sup;
        dominant = c;
      }
      if (ch_sup < opt.negligible_channel) {
        sol.left_exponent[c] = sol.right_exponent[c] = std::numeric_limits<double>::quiet_NaN();
        continue;
      }
      sol.right_exponent[c] = endpoint_slope_fit(sol.x, *chans[c], +1, lo, hi);
      sol.left_exponent[c] = endpoint_slope_fit(sol.x, *chans[c], -1, lo, hi);
    }
    sol.right_fit = sol.right_exponent[dominant];
    sol.left_fit = sol.left_exponent[dominant];

    for (std::size_t g = 0; g < grids.size(); ++g)
      sol.refinement_history.emplace_back(grids[g], nearest_value(per_grid_values[g], sol.eps2M));

    if (sol.refinement_history.size() >= 3) {
      const auto& hist = sol.refinement_history;
      const double d1 =
          std::abs(hist[hist.size() - 2].second - hist[hist.size() - 3].second);
      const double d2 = std::abs(hist.back().second - hist[hist.size() - 2].second);
      sol.converged = d2 <= std::max(d1 / 3.0, 1e-9 * std::max(1.0, std::abs(sol.eps2M)));
    } else {
      sol.converged = finest_ritz.converged;
    }
    out.push_back(std::move(sol));
  }
  return out;
}

ZEigenSolution solve_z_eigenproblem_one(double lambda, double B, int grid_size, int which,
                                        const ZSolveOptions& opt) {
  auto all = solve_z_eigenproblem(lambda, B, grid_size, which + 1, opt);
  if (static_cast<int>(all.size()) <= which)
    throw std::runtime_error("solve_z_eigenproblem: requested eigenvalue did not converge real");
  return std::move(all[which]);
}

}  // namespace dkps3::zsystem
