#pragma once

// Exact scalar arithmetic over the ring Z[i, 1/sqrt(2)]: rationals, the real
// quadratic extension Q(sqrt 2), and its complexification. The cyclic
// Duffin-Kemmer matrices live entirely in this ring, so every algebraic
// identity can be checked with zero residual; conversion to floating point
// happens only at API boundaries.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace dkps3 {

// Reduced fraction num/den with den > 0. Intermediates run through __int128;
// anything that would not narrow back to int64 throws.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) { *this = make(n, d); }

  // Exact conversion of a finite double (every finite double is dyadic).
  static Rational from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("Rational::from_double: non-finite");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    const double m = std::frexp(x, &exp);         // x = m * 2^exp, |m| in [0.5, 1)
    auto mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    while (mant != 0 && (mant & 1) == 0) {        // strip factors of two
      mant >>= 1;
      ++exp;
    }
    if (exp >= 0) {
      if (exp > 62) throw std::overflow_error("Rational::from_double: exponent too large");
      return make(static_cast<__int128>(mant) << exp, 1);
    }
    if (exp < -62) throw std::overflow_error("Rational::from_double: denominator too large");
    return make(mant, static_cast<__int128>(1) << (-exp));
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  using i128 = __int128;

  static Rational make(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lim = 0x7fffffffffffffffLL;
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("Rational: overflow");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
class SqrtTwoReal {
 public:
  constexpr SqrtTwoReal() = default;
  constexpr SqrtTwoReal(long long n) : a_(n) {}  // NOLINT: implicit by design
  SqrtTwoReal(Rational a) : a_(std::move(a)) {}  // NOLINT: implicit by design
  SqrtTwoReal(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static SqrtTwoReal sqrt2() { return SqrtTwoReal(Rational(0), Rational(1)); }
  static SqrtTwoReal inv_sqrt2() { return SqrtTwoReal(Rational(0), Rational(1, 2)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  // sign of a + b*sqrt(2); exact (sqrt 2 is irrational, so ties need a == b == 0)
  int sign() const {
    const int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    const Rational cmp = a_ * a_ - Rational(2) * b_ * b_;  // sign decided by |a|^2 vs 2 b^2
    return cmp.sign() == sa ? sa : sb;
  }

  double value() const { return a_.value() + b_.value() * std::sqrt(2.0); }

  std::string str() const {
    if (b_.is_zero()) return a_.str();
    std::string s;
    if (!a_.is_zero()) s += a_.str() + (b_.sign() > 0 ? "+" : "");
    s += b_.str() + "*sqrt2";
    return s;
  }

  friend SqrtTwoReal operator+(const SqrtTwoReal& x, const SqrtTwoReal& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend SqrtTwoReal operator-(const SqrtTwoReal& x, const SqrtTwoReal& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend SqrtTwoReal operator*(const SqrtTwoReal& x, const SqrtTwoReal& y) {
    return {x.a_ * y.a_ + Rational(2) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend SqrtTwoReal operator/(const SqrtTwoReal& x, const SqrtTwoReal& y) {
    const Rational norm = y.a_ * y.a_ - Rational(2) * y.b_ * y.b_;
    if (norm.is_zero()) throw std::domain_error("SqrtTwoReal: division by zero");
    const SqrtTwoReal num = x * SqrtTwoReal(y.a_, -y.b_);
    return {num.a_ / norm, num.b_ / norm};
  }
  SqrtTwoReal operator-() const { return {-a_, -b_}; }
  SqrtTwoReal& operator+=(const SqrtTwoReal& o) { return *this = *this + o; }
  SqrtTwoReal& operator-=(const SqrtTwoReal& o) { return *this = *this - o; }
  SqrtTwoReal& operator*=(const SqrtTwoReal& o) { return *this = *this * o; }

  friend bool operator==(const SqrtTwoReal& x, const SqrtTwoReal& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const SqrtTwoReal& x, const SqrtTwoReal& y) { return !(x == y); }
  friend bool operator<(const SqrtTwoReal& x, const SqrtTwoReal& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(const SqrtTwoReal& x, const SqrtTwoReal& y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>(const SqrtTwoReal& x, const SqrtTwoReal& y) { return y < x; }
  friend bool operator>=(const SqrtTwoReal& x, const SqrtTwoReal& y) { return y <= x; }

 private:
  Rational a_, b_;
};

inline SqrtTwoReal abs(const SqrtTwoReal& x) { return x.sign() < 0 ? -x : x; }

// Complex number over Q(sqrt 2); the entry type of the beta matrices.
class ExactComplex {
 public:
  constexpr ExactComplex() = default;
  constexpr ExactComplex(long long n) : re_(n) {}         // NOLINT: implicit by design
  ExactComplex(SqrtTwoReal re) : re_(std::move(re)) {}    // NOLINT: implicit by design
  ExactComplex(SqrtTwoReal re, SqrtTwoReal im) : re_(std::move(re)), im_(std::move(im)) {}

  static ExactComplex i() { return {SqrtTwoReal(0), SqrtTwoReal(1)}; }
  static ExactComplex inv_sqrt2() { return {SqrtTwoReal::inv_sqrt2(), SqrtTwoReal(0)}; }
  static ExactComplex i_over_sqrt2() { return {SqrtTwoReal(0), SqrtTwoReal::inv_sqrt2()}; }

  const SqrtTwoReal& re() const { return re_; }
  const SqrtTwoReal& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  std::complex<double> value() const { return {re_.value(), im_.value()}; }

  std::string str() const {
    if (im_.is_zero()) return re_.str();
    if (re_.is_zero()) return "(" + im_.str() + ")*i";
    return "(" + re_.str() + ")+(" + im_.str() + ")*i";
  }

  friend ExactComplex operator+(const ExactComplex& x, const ExactComplex& y) {
    return {x.re_ + y.re_, x.im_ + y.im_};
  }
  friend ExactComplex operator-(const ExactComplex& x, const ExactComplex& y) {
    return {x.re_ - y.re_, x.im_ - y.im_};
  }
  friend ExactComplex operator*(const ExactComplex& x, const ExactComplex& y) {
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  friend ExactComplex operator/(const ExactComplex& x, const ExactComplex& y) {
    const SqrtTwoReal norm = y.re_ * y.re_ + y.im_ * y.im_;
    if (norm.is_zero()) throw std::domain_error("ExactComplex: division by zero");
    const ExactComplex num = x * ExactComplex(y.re_, -y.im_);
    return {num.re_ / norm, num.im_ / norm};
  }
  ExactComplex operator-() const { return {-re_, -im_}; }
  ExactComplex& operator+=(const ExactComplex& o) { return *this = *this + o; }
  ExactComplex& operator-=(const ExactComplex& o) { return *this = *this - o; }
  ExactComplex& operator*=(const ExactComplex& o) { return *this = *this * o; }

  friend bool operator==(const ExactComplex& x, const ExactComplex& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }
  friend bool operator!=(const ExactComplex& x, const ExactComplex& y) { return !(x == y); }

 private:
  SqrtTwoReal re_, im_;
};

inline ExactComplex conj(const ExactComplex& z) { return {z.re(), -z.im()}; }
inline const SqrtTwoReal& real(const ExactComplex& z) { return z.re(); }
inline const SqrtTwoReal& imag(const ExactComplex& z) { return z.im(); }
inline SqrtTwoReal abs2(const ExactComplex& z) { return z.re() * z.re() + z.im() * z.im(); }

}  // namespace dkps3

namespace Eigen {

template <>
struct NumTraits<dkps3::SqrtTwoReal> : GenericNumTraits<dkps3::SqrtTwoReal> {
  typedef dkps3::SqrtTwoReal Real;
  typedef dkps3::SqrtTwoReal NonInteger;
  typedef dkps3::SqrtTwoReal Nested;
  typedef dkps3::SqrtTwoReal Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<dkps3::ExactComplex> : GenericNumTraits<dkps3::ExactComplex> {
  typedef dkps3::SqrtTwoReal Real;
  typedef dkps3::ExactComplex NonInteger;
  typedef dkps3::ExactComplex Nested;
  typedef dkps3::ExactComplex Literal;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
