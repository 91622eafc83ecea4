#include <nblab/bigfloat.hpp>
#include <nblab/error.hpp>

#include <algorithm>
#include <utility>

namespace nblab {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(x_, prec);
  mpfr_set_zero(x_, 1);
}

BigFloat::BigFloat(double v, mpfr_prec_t prec) {
  mpfr_init2(x_, prec);
  mpfr_set_d(x_, v, MPFR_RNDN);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec) {
  mpfr_init2(x_, prec);
  mpfr_set_si(x_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& q, mpfr_prec_t prec) {
  mpfr_init2(x_, prec);
  mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& decimal, mpfr_prec_t prec) {
  mpfr_init2(x_, prec);
  char* end = nullptr;
  mpfr_strtofr(x_, decimal.c_str(), &end, 10, MPFR_RNDN);
  if (decimal.empty() || end == nullptr || *end != '\0') {
    mpfr_clear(x_);
    throw Error(ErrorKind::InvalidArgument, "not a decimal number: '" + decimal + "'");
  }
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(x_, o.prec());
  mpfr_set(x_, o.x_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(x_, MPFR_PREC_MIN);
  mpfr_swap(x_, o.x_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(x_, o.prec());
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(x_, o.x_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(x_); }

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, x_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

namespace {

// Raise the precision of `x` in place so that a binary op with `o` keeps
// the wider of the two.
void widen(BigFloat& x, const BigFloat& o) {
  if (o.prec() > x.prec()) mpfr_prec_round(x.raw(), o.prec(), MPFR_RNDN);
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen(*this, o);
  mpfr_add(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen(*this, o);
  mpfr_sub(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen(*this, o);
  mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  widen(*this, o);
  mpfr_div(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long v) {
  mpfr_mul_si(x_, x_, v, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(long v) {
  mpfr_div_si(x_, x_, v, MPFR_RNDN);
  return *this;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a);
  mpfr_neg(r.x_, r.x_, MPFR_RNDN);
  return r;
}

BigFloat with_prec(const BigFloat& x, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat const_pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat const_euler(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat const_log2(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

#define NBLAB_UNARY(name, fn)              \
  BigFloat name(const BigFloat& x) {       \
    BigFloat r(x.prec());                  \
    fn(r.raw(), x.raw(), MPFR_RNDN);       \
    return r;                              \
  }

NBLAB_UNARY(abs, mpfr_abs)
NBLAB_UNARY(sqrt, mpfr_sqrt)
NBLAB_UNARY(exp, mpfr_exp)
NBLAB_UNARY(log, mpfr_log)
NBLAB_UNARY(sin, mpfr_sin)
NBLAB_UNARY(cos, mpfr_cos)
NBLAB_UNARY(sinh, mpfr_sinh)
NBLAB_UNARY(cosh, mpfr_cosh)
NBLAB_UNARY(lgamma, mpfr_lngamma)

#undef NBLAB_UNARY

BigFloat floor(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(x.prec(), y.prec()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(x.prec(), y.prec()));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(x.prec(), y.prec()));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, long n) {
  BigFloat r(x.prec());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  // Smith's algorithm avoids overflow in |o|^2.
  if (abs(o.re) >= abs(o.im)) {
    const BigFloat t = o.im / o.re;
    const BigFloat d = o.re + o.im * t;
    BigFloat r = (re + im * t) / d;
    im = (im - re * t) / d;
    re = std::move(r);
  } else {
    const BigFloat t = o.re / o.im;
    const BigFloat d = o.re * t + o.im;
    BigFloat r = (re * t + im) / d;
    im = (im * t - re) / d;
    re = std::move(r);
  }
  return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& v) {
  re *= v;
  im *= v;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigFloat& v) {
  re /= v;
  im /= v;
  return *this;
}

BigComplex& BigComplex::operator*=(long v) {
  re *= v;
  im *= v;
  return *this;
}

BigComplex& BigComplex::operator/=(long v) {
  re /= v;
  im /= v;
  return *this;
}

BigComplex with_prec(const BigComplex& z, mpfr_prec_t prec) {
  return {with_prec(z.re, prec), with_prec(z.im, prec)};
}

BigComplex from_polar(const BigFloat& r, const BigFloat& theta) {
  BigFloat s(theta.prec()), c(theta.prec());
  mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
  return {r * c, r * s};
}

BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }

BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex exp(const BigComplex& z) { return from_polar(exp(z.re), z.im); }

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw Error(ErrorKind::InvalidArgument, "log of zero");
  return {log(abs(z)), arg(z)};
}

BigComplex sqrt(const BigComplex& z) {
  if (z.is_zero()) return z;
  const BigFloat r = abs(z);
  BigFloat a = sqrt((r + abs(z.re)) / 2L);
  BigFloat b = z.im / (a * 2L);
  if (z.re.sign() >= 0) return {a, b};
  if (z.im.sign() < 0) return {abs(b), -a};
  return {abs(b), a};
}

BigComplex pow(const BigComplex& z, const BigComplex& w) {
  if (z.is_zero()) {
    require(w.re.sign() > 0, "0^w needs Re w > 0");
    return BigComplex(std::max(z.prec(), w.prec()));
  }
  return exp(w * log(z));
}

BigComplex pow(const BigComplex& z, long n) {
  BigComplex result(BigFloat(1L, z.prec()));
  BigComplex b = z;
  bool invert = n < 0;
  unsigned long e = invert ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  while (e > 0) {
    if (e & 1UL) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  if (invert) return BigComplex(BigFloat(1L, z.prec())) / result;
  return result;
}

BigComplex sin(const BigComplex& z) {
  // sin(x+iy) = sin x cosh y + i cos x sinh y
  BigFloat s(z.prec()), c(z.prec());
  mpfr_sin_cos(s.raw(), c.raw(), z.re.raw(), MPFR_RNDN);
  return {s * cosh(z.im), c * sinh(z.im)};
}

BigComplex cos(const BigComplex& z) {
  BigFloat s(z.prec()), c(z.prec());
  mpfr_sin_cos(s.raw(), c.raw(), z.re.raw(), MPFR_RNDN);
  return {c * cosh(z.im), -(s * sinh(z.im))};
}

std::string to_string(const BigComplex& z, int digits) {
  std::string out = z.re.to_string(digits);
  if (mpfr_signbit(z.im.raw()) && !z.im.is_zero()) {
    out += "-" + abs(z.im).to_string(digits) + "i";
  } else {
    out += "+" + z.im.to_string(digits) + "i";
  }
  return out;
}

}  // namespace nblab
