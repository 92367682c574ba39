#pragma once

// Singular-point analysis of the coupled z-system in x = sin z: the indicial
// cubic and its trigonometric Cardano roots, Frobenius exponents, channel
// amplitude ratios, and a numerical eigensolver for 2*eps*M on (-1, 1).

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace dkps3::zsystem {

enum class CubicBranch { TrigThreeReal, CardanoOneReal, DepressedCubeRoot };

std::string branch_name(CubicBranch b);

struct IndicialSpectrum {
  double Lambda = 0.0, B = 0.0;
  double lambda = 0.0, lambda_prime = 0.0;  // Lambda -+ B/2
  double a_c = 0.0, b_c = 0.0, c_c = 0.0;   // monic cubic A^3 + a_c A^2 + b_c A + c_c
  double p = 0.0, q = 0.0;                  // depressed form Y^3 + p Y + q
  CubicBranch branch = CubicBranch::TrigThreeReal;
  double phi = 0.0;                          // Cardano angle (trig branch only)
  std::array<std::complex<double>, 3> roots; // A-values, ascending real part
  bool all_real = true;
};

IndicialSpectrum indicial_cubic(double Lambda, double B);

struct ExponentPair {
  double regular = 0.0;   // (1 + sqrt(1 + 8A)) / 4
  double singular = 0.0;  // (1 - sqrt(1 + 8A)) / 4
  bool oscillatory = false;  // 1 + 8A < 0: complex pair, reported, not realified
  std::complex<double> regular_c, singular_c;
};

ExponentPair frobenius_exponents(double A);
std::array<ExponentPair, 3> frobenius_exponents(const IndicialSpectrum& spec);

struct AmplitudeRatios {
  bool complex_root = false;
  bool degenerate = false;  // A == lambda or A == lambda' (A2 = 0 family)
  double a1_over_a2 = 0.0, a3_over_a2 = 0.0;  // right endpoint (x -> +1)
  double b1_over_b2 = 0.0, b3_over_b2 = 0.0;  // left endpoint, opposite sign
};

AmplitudeRatios amplitude_ratios(const IndicialSpectrum& spec, int root_index);

struct ZSolveOptions {
  int refinements = 2;      // grids K, 2K, ..., K * 2^refinements
  int coarse_grid = 110;    // dense bootstrap size
  int block_extra = 6;      // subspace block = nev + block_extra
  int max_iterations = 200;
  double residual_tol = 1e-9;
  double imag_tol = 1e-8;             // reject eigenvalues with Im > tol * max(1, |Re|)
  double cluster_tol = 1e-7;          // degeneracy clustering for parity symmetrization
  double fit_window_lo = 2.0;         // fit window: 1 -+ x in [lo*h, 10*lo*h]
  bool parity_symmetrize = true;      // applied when lambda == lambda'
  double negligible_channel = 1e-8;   // channel sup-norm threshold for fits
};

struct ZEigenSolution {
  double lambda = 0.0, lambda_prime = 0.0, Lambda = 0.0, B = 0.0;
  int index = 0;
  double eps2M = 0.0;
  bool converged = false;
  std::array<double, 3> channel_exponent{};  // designated regular exponents (Z1, Z2bar, Z3)
  std::vector<double> x;                     // interior grid in (-1, 1)
  std::vector<double> Z1, Z2bar, Z3;
  // Least-squares endpoint fits per channel; NaN for negligible channels.
  std::array<double, 3> left_exponent{}, right_exponent{};
  double left_fit = 0.0, right_fit = 0.0;    // dominant-channel fits
  std::vector<std::pair<int, double>> refinement_history;  // (grid, eps2M)
};

// Lowest `nev` eigenvalues of the coupled system for radial eigenvalue
// `lambda` and field B (lambda' = lambda + B). Boundary behavior
// (1 -+ x)^{a+} is built into the discretization per channel.
std::vector<ZEigenSolution> solve_z_eigenproblem(double lambda, double B, int grid_size, int nev,
                                                 const ZSolveOptions& opt = {});

ZEigenSolution solve_z_eigenproblem_one(double lambda, double B, int grid_size, int which,
                                        const ZSolveOptions& opt = {});

// Least-squares slope of log|Z| against log(scale - sign*x) over the window
// where (scale - sign*x) in [lo, hi]; includes a linear correction regressor.
double endpoint_slope_fit(const std::vector<double>& x, const std::vector<double>& Z, int sign,
                          double lo, double hi);

}  // namespace dkps3::zsystem
