#include "dkps3/algebra.hpp"

#include <sstream>

namespace dkps3::algebra {

namespace {

const ExactComplex kZero{};
const ExactComplex kOne{1};

ExactMatrix10 zero10() {
  ExactMatrix10 m;
  m.setConstant(kZero);
  return m;
}

ExactMatrix3 zero3() {
  ExactMatrix3 m;
  m.setConstant(kZero);
  return m;
}

// Column vector e_i^+ (conjugate transpose of the row e_i).
Eigen::Matrix<ExactComplex, 3, 1> dagger(const ExactRow3& e) {
  Eigen::Matrix<ExactComplex, 3, 1> c;
  for (int k = 0; k < 3; ++k) c(k) = conj(e(k));
  return c;
}

// Assemble the spatial beta with row pattern
//   [ 0, 0, e, 0; 0, 0, 0, tau; -e^+, 0, 0, 0; 0, -tau, 0, 0 ]
// for the 1-3-3-3 block layout (offsets 0, 1, 4, 7).
ExactMatrix10 spatial_beta(const ExactRow3& e, const ExactMatrix3& tau) {
  ExactMatrix10 b = zero10();
  b.block<1, 3>(0, 4) = e;
  b.block<3, 3>(1, 7) = tau;
  b.block<3, 1>(4, 0) = -dagger(e);
  b.block<3, 3>(7, 1) = -tau;
  return b;
}

ExactMatrix10 spin_block_diag(const ExactMatrix3& tau) {
  ExactMatrix10 s = zero10();
  s.block<3, 3>(1, 1) = tau;
  s.block<3, 3>(4, 4) = tau;
  s.block<3, 3>(7, 7) = tau;
  return s;
}

ExactMatrix10 commutator(const ExactMatrix10& a, const ExactMatrix10& b) {
  return a * b - b * a;
}

std::string first_mismatch(const ExactMatrix10& got, const ExactMatrix10& want) {
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      if (got(i, j) != want(i, j)) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << "): got " << got(i, j).str() << ", want "
           << want(i, j).str();
        return os.str();
      }
  return "";
}

}  // namespace

const ExactMatrix10& DkpMatrixSet::beta(int a) const {
  switch (a) {
    case 0: return beta0;
    case 1: return beta1;
    case 2: return beta2;
    case 3: return beta3;
    default: throw std::out_of_range("DkpMatrixSet::beta: index must be 0..3");
  }
}

DkpMatrixSet build_dkp_set() {
  DkpMatrixSet set;
  const ExactComplex i = ExactComplex::i();
  const ExactComplex g = ExactComplex::inv_sqrt2();
  const ExactComplex ig = ExactComplex::i_over_sqrt2();

  set.e1 << -ig, kZero, ig;
  set.e2 << g, kZero, g;
  set.e3 << kZero, i, kZero;

  set.tau1 = zero3();
  set.tau1(0, 1) = g;
  set.tau1(1, 0) = g;
  set.tau1(1, 2) = g;
  set.tau1(2, 1) = g;

  set.tau2 = zero3();
  set.tau2(0, 1) = -ig;
  set.tau2(1, 0) = ig;
  set.tau2(1, 2) = -ig;
  set.tau2(2, 1) = ig;

  set.tau3 = zero3();
  set.tau3(0, 0) = kOne;
  set.tau3(2, 2) = -kOne;

  set.beta0 = zero10();
  for (int k = 0; k < 3; ++k) {
    set.beta0(1 + k, 4 + k) = i;
    set.beta0(4 + k, 1 + k) = -i;
  }
  set.beta1 = spatial_beta(set.e1, set.tau1);
  set.beta2 = spatial_beta(set.e2, set.tau2);
  set.beta3 = spatial_beta(set.e3, set.tau3);

  set.S1 = spin_block_diag(set.tau1);
  set.S2 = spin_block_diag(set.tau2);
  set.S3 = spin_block_diag(set.tau3);
  return set;
}

GeneratorSet build_generators(const DkpMatrixSet& set) {
  GeneratorSet gen;
  gen.J12 = commutator(set.beta1, set.beta2);
  gen.J13 = commutator(set.beta1, set.beta3);
  gen.J23 = commutator(set.beta2, set.beta3);
  return gen;
}

ExactMatrix10 coupling_block(const DkpMatrixSet& set) {
  const GeneratorSet gen = build_generators(set);
  return set.beta1 * gen.J13 + set.beta2 * gen.J23;
}

ExactMatrix10 expected_coupling_block(const DkpMatrixSet& set) {
  ExactMatrix10 m = zero10();
  m.block<1, 3>(0, 4) = -(ExactComplex(2) * set.e3);
  m.block<3, 3>(1, 7) = -set.tau3;
  m.block<3, 3>(7, 1) = set.tau3;
  return m;
}

TrilinearReport check_dkp_algebra(const DkpMatrixSet& set) {
  TrilinearReport rep;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        const ExactComplex eta_ab{a == b ? kMinkowskiDiag[a] : 0};
        const ExactComplex eta_cb{c == b ? kMinkowskiDiag[c] : 0};
        const ExactMatrix10 lhs =
            set.beta(a) * set.beta(b) * set.beta(c) + set.beta(c) * set.beta(b) * set.beta(a);
        const ExactMatrix10 rhs = eta_ab * set.beta(c) + eta_cb * set.beta(a);
        const ExactMatrix10 diff = lhs - rhs;
        const Matrix10c f = to_complex(diff);
        rep.max_float_residual = std::max(rep.max_float_residual, f.cwiseAbs().maxCoeff());
        if (!exactly_zero(diff) && rep.exact_zero) {
          rep.exact_zero = false;
          rep.first_violation = {a, b, c};
          std::ostringstream os;
          os << "trilinear identity fails at triple (" << a << "," << b << "," << c << ")";
          rep.detail = os.str();
        }
      }
    }
  }
  return rep;
}

std::vector<IdentityCheck> run_identity_checks() {
  const DkpMatrixSet set = build_dkp_set();
  const GeneratorSet gen = build_generators(set);
  const ExactComplex i = ExactComplex::i();
  std::vector<IdentityCheck> checks;

  auto add = [&checks](std::string name, const ExactMatrix10& got, const ExactMatrix10& want) {
    IdentityCheck c;
    c.name = std::move(name);
    c.pass = exactly_equal(got, want);
    if (!c.pass) c.detail = first_mismatch(got, want);
    checks.push_back(std::move(c));
  };

  add("J12 == -i*S3", gen.J12, (-i) * set.S3);
  add("J13 == +i*S2", gen.J13, i * set.S2);
  add("J23 == -i*S1", gen.J23, (-i) * set.S1);
  add("coupling block beta1*J13 + beta2*J23", coupling_block(set), expected_coupling_block(set));
  add("S3^3 == S3", ExactMatrix10(set.S3 * set.S3 * set.S3), set.S3);

  {
    IdentityCheck c;
    c.name = "J^{ab} == -J^{ba} for all pairs";
    c.pass = true;
    for (int a = 0; a < 4 && c.pass; ++a)
      for (int b = 0; b < 4 && c.pass; ++b) {
        const ExactMatrix10 jab = set.beta(a) * set.beta(b) - set.beta(b) * set.beta(a);
        const ExactMatrix10 jba = set.beta(b) * set.beta(a) - set.beta(a) * set.beta(b);
        if (!exactly_equal(jab, ExactMatrix10(-jba))) {
          c.pass = false;
          c.detail = "pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
      }
    checks.push_back(std::move(c));
  }

  {
    const TrilinearReport rep = check_dkp_algebra(set);
    IdentityCheck c;
    c.name = "trilinear DKP identity (64 triples)";
    c.pass = rep.exact_zero;
    c.detail = rep.detail;
    checks.push_back(std::move(c));
  }

  {
    // Every beta has zero diagonal blocks in the 1-3-3-3 layout.
    IdentityCheck c;
    c.name = "beta diagonal blocks vanish";
    c.pass = true;
    const std::array<int, 4> off{0, 1, 4, 7};
    const std::array<int, 4> sz{1, 3, 3, 3};
    for (int a = 0; a < 4 && c.pass; ++a)
      for (int blk = 0; blk < 4 && c.pass; ++blk)
        for (int r = 0; r < sz[blk] && c.pass; ++r)
          for (int col = 0; col < sz[blk]; ++col)
            if (!set.beta(a)(off[blk] + r, off[blk] + col).is_zero()) {
              c.pass = false;
              c.detail = "beta^" + std::to_string(a) + " block " + std::to_string(blk);
              break;
            }
    checks.push_back(std::move(c));
  }

  return checks;
}

Matrix10c to_complex(const ExactMatrix10& m) {
  Matrix10c out;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) out(i, j) = m(i, j).value();
  return out;
}

}  // namespace dkps3::algebra
