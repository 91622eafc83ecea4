#include "oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oracle {

using nblab::BigComplex;
using nblab::BigFloat;
using nblab::GaussianRational;

namespace {

using GK = boost::math::quadrature::gauss_kronrod<long double, 31>;

BigComplex dot(const std::vector<BigComplex>& a, const std::vector<BigComplex>& b, mpfr_prec_t prec) {
  BigComplex acc(prec);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i].conj();
  return acc;
}

}  // namespace

BigFloat dense_lsq_error(const std::vector<GaussianRational>& p, const std::vector<GaussianRational>& q, long n,
                         mpfr_prec_t prec) {
  const std::size_t len = std::max(p.size(), q.size() + static_cast<std::size_t>(n));
  std::vector<std::vector<BigComplex>> basis;
  auto project_out = [&](std::vector<BigComplex>& v) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& e : basis) {
        const BigComplex c = dot(v, e, prec);
        for (std::size_t i = 0; i < len; ++i) v[i] -= c * e[i];
      }
  };
  for (long j = 0; j <= n; ++j) {
    std::vector<BigComplex> v(len, BigComplex(prec));
    for (std::size_t i = 0; i < q.size(); ++i) v[i + static_cast<std::size_t>(j)] = BigComplex(q[i], prec);
    project_out(v);
    const BigFloat norm = sqrt(dot(v, v, prec).re);
    for (auto& x : v) x /= norm;
    basis.push_back(std::move(v));
  }
  std::vector<BigComplex> r(len, BigComplex(prec));
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = BigComplex(p[i], prec);
  project_out(r);
  return dot(r, r, prec).re;
}

BigComplex zeta_euler_maclaurin(const BigComplex& s, mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 64;
  const BigComplex z = nblab::with_prec(s, wp);
  const long big_n = 40 + static_cast<long>(std::ceil(std::abs(s.im.to_double())));
  const int terms = 40;
  // B_0..B_{2 terms}: sum_{k<m} C(m+1, k) B_k = -(m+1) B_m.
  std::vector<nblab::Rational> bern(2 * terms + 1);
  bern[0] = 1;
  for (int m = 1; m <= 2 * terms; ++m) {
    nblab::Rational acc = 0;
    nblab::BigInt binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      acc += nblab::Rational(binom) * bern[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    bern[m] = -acc / (m + 1);
  }
  BigComplex sum(wp);
  for (long k = 1; k < big_n; ++k) sum += exp(-z * nblab::log(BigFloat(k, wp)));
  const BigFloat log_n = nblab::log(BigFloat(big_n, wp));
  const BigComplex n_pow = exp(-z * log_n);  // N^{-s}
  const BigComplex one(BigFloat(1L, wp));
  sum += n_pow * BigFloat(big_n, wp) / (z - one);
  sum += n_pow / 2L;
  // sum_k B_2k/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
  BigComplex rising = z;  // s(s+1)...(s+2k-2)
  BigComplex npow = n_pow / BigFloat(big_n, wp);
  nblab::BigInt fact = 2;
  for (int k = 1; k <= terms; ++k) {
    sum += rising * npow * BigFloat(bern[2 * k] / nblab::Rational(fact), wp);
    rising = rising * (z + BigComplex(BigFloat(2L * k - 1, wp))) * (z + BigComplex(BigFloat(2L * k, wp)));
    npow = npow / (BigFloat(big_n, wp) * BigFloat(big_n, wp));
    fact *= (2 * k + 1) * (2 * k + 2);
  }
  return nblab::with_prec(sum, prec);
}

long double fracpart_reference(long k1, long k2, long d) {
  const long double a = static_cast<long double>(k1) / d, b = static_cast<long double>(k2) / d;
  const long double period = static_cast<long double>(d) / std::gcd(k1, k2);
  std::vector<long double> cuts{0, period};
  for (long n = 1; n * d < k1 * period + 0.5L; ++n) cuts.push_back(static_cast<long double>(n) * d / k1);
  for (long m = 1; m * d < k2 * period + 0.5L; ++m) cuts.push_back(static_cast<long double>(m) * d / k2);
  std::sort(cuts.begin(), cuts.end());
  long double total = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const long double lo = cuts[i], hi = cuts[i + 1];
    if (hi - lo < 1e-15L * period) continue;
    const long double mid = (lo + hi) / 2;
    const long double fa = std::floor(a * mid), fb = std::floor(b * mid);
    // first period directly, the rest through sum_k 1/(kT + u)^2
    auto f = [&](long double u) {
      const long double h = (a * u - fa) * (b * u - fb);
      const long double direct = u > 0 ? h / (u * u) : a * b;
      return direct + h * boost::math::trigamma(1 + u / period) / (period * period);
    };
    total += GK::integrate(f, lo, hi, 15, 1e-16L);
  }
  return total;
}

long double chi_reference(long double theta) {
  // x = 1/t on [1, infinity): {theta x}/x^2.
  const long double first = GK::integrate([&](long double x) { return theta / x; }, 1.0L, 1 / theta, 15, 1e-16L);
  const long double rest = GK::integrate(
      [&](long double u) { return theta * u * theta * theta * boost::math::trigamma(1 + theta * u); }, 0.0L,
      1 / theta, 15, 1e-16L);
  return first + rest;
}

std::complex<long double> log_moment_reference(int j, double mu, double L) {
  const long pieces = 1 + static_cast<long>(std::ceil(std::abs(mu) * L / 2 + L / 4));
  const long double h = static_cast<long double>(L) / pieces;
  long double re = 0, im = 0;
  for (long k = 0; k < pieces; ++k) {
    const long double lo = k * h, hi = (k + 1) * h;
    re += GK::integrate([&](long double x) { return std::pow(x, j) * std::cos(mu * x); }, lo, hi, 0, 0);
    im += GK::integrate([&](long double x) { return std::pow(x, j) * std::sin(mu * x); }, lo, hi, 0, 0);
  }
  return {re, im};
}

}  // namespace oracle
