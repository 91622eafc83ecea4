#pragma once

#include <nblab/rational.hpp>

#include <mpfr.h>

#include <string>

namespace nblab {

/// Owning wrapper over mpfr_t. Binary operations round to the larger of the
/// two operand precisions.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128);
  BigFloat(double v, mpfr_prec_t prec);
  BigFloat(long v, mpfr_prec_t prec);
  BigFloat(int v, mpfr_prec_t prec) : BigFloat(static_cast<long>(v), prec) {}
  BigFloat(const Rational& q, mpfr_prec_t prec);
  /// Parses a decimal string; throws InvalidArgument on malformed input.
  BigFloat(const std::string& decimal, mpfr_prec_t prec);

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(x_, MPFR_RNDN); }
  std::string to_string(int digits) const;

  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  bool is_integer() const { return mpfr_integer_p(x_) != 0; }
  int sign() const { return mpfr_sgn(x_); }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat& operator*=(long v);
  BigFloat& operator/=(long v);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator*(BigFloat a, long v) { return a *= v; }
  friend BigFloat operator/(BigFloat a, long v) { return a /= v; }
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.x_, b.x_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.x_, b.x_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.x_, b.x_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.x_, b.x_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.x_, b.x_); }

 private:
  mpfr_t x_;
};

BigFloat with_prec(const BigFloat& x, mpfr_prec_t prec);

BigFloat const_pi(mpfr_prec_t prec);
BigFloat const_euler(mpfr_prec_t prec);
BigFloat const_log2(mpfr_prec_t prec);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, long n);
BigFloat floor(const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
/// log |Gamma(x)| for real x.
BigFloat lgamma(const BigFloat& x);

/// Complex number over BigFloat; the precision is that of the real part.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(BigFloat r) : re(std::move(r)), im(0L, re.prec()) {}
  BigComplex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}
  BigComplex(const GaussianRational& z, mpfr_prec_t prec) : re(z.re, prec), im(z.im, prec) {}

  mpfr_prec_t prec() const { return re.prec(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  BigComplex conj() const { return {re, -im}; }
  BigFloat norm() const { return re * re + im * im; }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& v);
  BigComplex& operator/=(const BigFloat& v);
  BigComplex& operator*=(long v);
  BigComplex& operator/=(long v);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigFloat& b) { return a *= b; }
  friend BigComplex operator*(const BigFloat& b, BigComplex a) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigFloat& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, long b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, long b) { return a /= b; }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
};

BigComplex with_prec(const BigComplex& z, mpfr_prec_t prec);
BigComplex from_polar(const BigFloat& r, const BigFloat& theta);

BigFloat abs(const BigComplex& z);
BigFloat arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Principal branch.
BigComplex log(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& z, const BigComplex& w);
BigComplex pow(const BigComplex& z, long n);
BigComplex sin(const BigComplex& z);
BigComplex cos(const BigComplex& z);

std::string to_string(const BigComplex& z, int digits);

}  // namespace nblab
