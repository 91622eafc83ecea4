#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace nblab {

/// Arbitrary-precision rational; GMP keeps every result in lowest terms with
/// a positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

/// Exact element of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real, Rational imag = 0)
      : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(long real) : re(real), im(0) {}

  static GaussianRational i() { return {0, 1}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

GaussianRational pow(const GaussianRational& base, unsigned long exponent);
std::string to_string(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Decimal rendering of a rational with `digits` significant digits.
std::string to_decimal(const Rational& q, int digits);

}  // namespace nblab
