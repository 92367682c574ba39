#pragma once

// Radial ladder operators on S^3, their hypergeometric bound states, and the
// quantization rule 2*Lambda + B^2 = N(N+1). quantize() is templated on the
// scalar so the rule can be checked in exact rationals for rational B.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dkps3/exact.hpp"
#include "dkps3/geometry.hpp"

namespace dkps3::radial {

// First-order operators gamma * (sign_d * d/dr + (nu + shift*cos r)/sin r),
// gamma = 1/sqrt(2). The a-family differentiates with +, the b-family with -.
enum class Ladder { AMinus, A, APlus, BMinus, B, BPlus };

int derivative_sign(Ladder op);   // +1 for a-family, -1 for b-family
int cosine_shift(Ladder op);      // -1, 0, +1

struct LadderOperators {
  geometry::FieldConfig cfg;

  double coefficient(Ladder op, double r) const;

  // Apply to samples f_j = f(r0 + j h) with central differences; the result
  // is valid on j = 1 .. f.size()-2 and is returned with matching offset
  // (result[j] corresponds to r0 + (j+1) h).
  std::vector<double> apply(Ladder op, const std::vector<double>& f, double r0, double h) const;
};

LadderOperators make_operators(const geometry::FieldConfig& cfg);

template <class Scalar>
struct RadialSolution {
  int m = 0;
  Scalar B{};
  int n = 0;
  Scalar a_r{}, b_r{};                // prefactor exponents |m|/2, |m+2B|/2
  Scalar alpha{}, beta{}, gamma_h{};  // hypergeometric parameters; alpha = -n
  Scalar lambda{};                    // eigenvalue of b-_ a^
  Scalar lambda_prime{};              // eigenvalue of a+^ b^ = lambda + B
  Scalar Lambda{};                    // lambda + B/2
  Scalar N{};                         // a_r + b_r + n
  std::vector<Scalar> poly_coeffs;    // terminating series of F(-n, beta, gamma; y)
};

// Bound-state parameters for azimuthal number m, field B, radial number n.
template <class Scalar>
RadialSolution<Scalar> quantize(int m, Scalar B, int n) {
  if (n < 0) throw std::invalid_argument("quantize: n must be non-negative");
  using dkps3::abs;
  using std::abs;
  const Scalar half = Scalar(1) / Scalar(2);

  RadialSolution<Scalar> sol;
  sol.m = m;
  sol.B = B;
  sol.n = n;
  sol.a_r = abs(Scalar(m)) * half;
  sol.b_r = abs(Scalar(m) + Scalar(2) * B) * half;
  sol.N = sol.a_r + sol.b_r + Scalar(n);

  const Scalar root = sol.a_r + sol.b_r + half + Scalar(n);
  sol.lambda = (root * root - (B + half) * (B + half)) * half;
  sol.lambda_prime = sol.lambda + B;
  sol.Lambda = sol.lambda + B * half;

  sol.alpha = Scalar(-n);
  sol.beta = Scalar(2) * (sol.a_r + sol.b_r) + Scalar(1) + Scalar(n);
  sol.gamma_h = Scalar(2) * sol.a_r + Scalar(1);

  // c_{k+1} = c_k (k + alpha)(k + beta) / ((k + 1)(k + gamma)), c_0 = 1.
  sol.poly_coeffs.assign(static_cast<std::size_t>(n) + 1, Scalar(0));
  sol.poly_coeffs[0] = Scalar(1);
  for (int k = 0; k < n; ++k) {
    const Scalar kk = Scalar(k);
    sol.poly_coeffs[k + 1] = sol.poly_coeffs[k] * (kk + sol.alpha) * (kk + sol.beta) /
                             ((kk + Scalar(1)) * (kk + sol.gamma_h));
  }
  return sol;
}

RadialSolution<double> to_double(const RadialSolution<Rational>& sol);

// R(r) = sin^{2a}(r/2) cos^{2b}(r/2) P_n(sin^2(r/2)), normalized to sup = 1 on
// the grid. Throws std::range_error when the prefactor underflows everywhere.
std::vector<double> radial_wavefunction(const RadialSolution<double>& sol,
                                        const std::vector<double>& r_grid);

// Terminating series at y, double or exact.
template <class Scalar>
Scalar polynomial_value(const RadialSolution<Scalar>& sol, Scalar y) {
  Scalar acc = Scalar(0);
  for (auto it = sol.poly_coeffs.rbegin(); it != sol.poly_coeffs.rend(); ++it)
    acc = acc * y + *it;
  return acc;
}

struct EigenRelationReport {
  double lambda = 0.0;
  double lambda_prime = 0.0;
  double resid_lambda = 0.0;        // || b-_ a^ R - lambda R ||_inf / || R ||_inf
  double resid_lambda_prime = 0.0;  // || a+^ b^ R - lambda' R ||_inf / || R ||_inf
};

// Finite-difference application of both operator compositions to the closed
// form wavefunction; residual sup-norms over r in [window, pi - window].
EigenRelationReport verify_eigenrelation(const RadialSolution<double>& sol, double h,
                                         double window = 0.3);

// Smallest eigenvalue of the tridiagonal Dirichlet discretization of b-_ a^
// on (0, pi) with `points` interior nodes (Sturm bisection; the matrix is
// similar to a symmetric tridiagonal).
double discretized_ground_eigenvalue(const geometry::FieldConfig& cfg, int points);

// Interior nodes lo + j (hi-lo)/(count+1), j = 1..count.
std::vector<double> uniform_open_grid(double lo, double hi, int count);

}  // namespace dkps3::radial
