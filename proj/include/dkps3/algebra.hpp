#pragma once

// Cyclic-representation Duffin-Kemmer matrices (10x10, block structure
// 1-3-3-3), Lorentz generators, and exact identity checks.

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dkps3/exact.hpp"

namespace dkps3::algebra {

using ExactMatrix10 = Eigen::Matrix<ExactComplex, 10, 10>;
using ExactMatrix3 = Eigen::Matrix<ExactComplex, 3, 3>;
using ExactRow3 = Eigen::Matrix<ExactComplex, 1, 3>;
using Matrix10c = Eigen::Matrix<std::complex<double>, 10, 10>;

// Metric signature diag(+,-,-,-); index order a in {0,1,2,3}.
inline constexpr std::array<int, 4> kMinkowskiDiag{1, -1, -1, -1};

struct DkpMatrixSet {
  ExactMatrix10 beta0, beta1, beta2, beta3;
  ExactMatrix10 S1, S2, S3;  // block-diagonal spin matrices diag(0, tau_i, tau_i, tau_i)
  ExactRow3 e1, e2, e3;
  ExactMatrix3 tau1, tau2, tau3;

  const ExactMatrix10& beta(int a) const;
};

struct GeneratorSet {
  ExactMatrix10 J12, J13, J23;
};

DkpMatrixSet build_dkp_set();
GeneratorSet build_generators(const DkpMatrixSet& set);

// (beta^1 J^13 + beta^2 J^23); equals the block matrix with entries
// -2 e3 at block (1,3), -tau3 at (2,4), +tau3 at (4,2).
ExactMatrix10 coupling_block(const DkpMatrixSet& set);
ExactMatrix10 expected_coupling_block(const DkpMatrixSet& set);

// Trilinear identity beta^a beta^b beta^c + beta^c beta^b beta^a
//                    = eta^{ab} beta^c + eta^{cb} beta^a over all 64 triples.
struct TrilinearReport {
  bool exact_zero = true;
  std::array<int, 3> first_violation{-1, -1, -1};
  double max_float_residual = 0.0;  // after conversion to complex<double>
  std::string detail;
};
TrilinearReport check_dkp_algebra(const DkpMatrixSet& set);

// Pass/fail table for all exact identities (CLI `algebra-check`).
struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};
std::vector<IdentityCheck> run_identity_checks();

Matrix10c to_complex(const ExactMatrix10& m);

template <typename Derived>
bool exactly_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

template <typename DerivedA, typename DerivedB>
bool exactly_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace dkps3::algebra
