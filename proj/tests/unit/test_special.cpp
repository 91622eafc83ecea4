#include <nblab/error.hpp>
#include <nblab/special.hpp>

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"

using namespace nblab;

namespace {

constexpr mpfr_prec_t P = 128;

BigComplex c(double re, double im = 0, mpfr_prec_t prec = P) { return BigComplex(re, im, prec); }
double dist(const BigComplex& a, const BigComplex& b) { return abs(a - b).to_double(); }

}  // namespace

TEST_CASE("zeta against Euler-Maclaurin") {
  const BigFloat pi = const_pi(P);
  CHECK(dist(zeta(c(2), P), BigComplex(pi * pi / 6L)) < 1e-35);
  CHECK(std::abs(zeta(c(0.5), P).re.to_double() + 1.4603545088095868) < 1e-15);
  for (auto [s, t] : {std::pair{0.5, 0.0}, {0.5, 7.5}, {0.25, 30.0}, {0.9, 59.0}, {3.0, -4.0}, {0.5, 45.0}})
    CHECK(dist(zeta(c(s, t), P), oracle::zeta_euler_maclaurin(c(s, t), P)) < 1e-30);
  CHECK(abs(zeta(c(0.5, 14.134725141734693790), P)).to_double() < 1e-8);
  try {
    zeta(c(1), P);
    FAIL("expected PoleAtOne");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleAtOne);
  }
  CHECK_THROWS_AS(zeta(c(-0.5, 1), P), Error);
}

TEST_CASE("log gamma against MPFR on the real line") {
  for (double x : {0.5, 1.0, 2.5, 7.25, 31.0, 0.01}) {
    const BigFloat ref = lgamma(BigFloat(x, P));
    CHECK(std::abs(log_gamma(c(x), P).re.to_double() - ref.to_double()) < 1e-15);
  }
  // reflection region and Gamma(1/2) = sqrt(pi)
  CHECK(dist(gamma(c(0.5), P), BigComplex(sqrt(const_pi(P)))) < 1e-35);
  // Gamma(z+1) = z Gamma(z) off the axis
  const BigComplex z = c(-2.3, 1.7);
  CHECK(abs(gamma(z + c(1), P) - z * gamma(z, P)).to_double() < 1e-30);
  CHECK_THROWS_AS(gamma(c(-3), P), Error);
}

TEST_CASE("gamma_plus forms") {
  CHECK(dist(gamma_plus(c(0.5), P), c(1)) < 1e-35);
  for (int k = 0; k <= 100; ++k) {
    const double tau = 0.5 * k;
    const BigComplex s = c(0.5, tau);
    const BigComplex a = gamma_plus(s, P, GammaPlusForm::Product);
    const BigComplex b = gamma_plus(s, P, GammaPlusForm::Quotient);
    CHECK(dist(a, b) < std::ldexp(1.0, -P + 8));
    CHECK(std::abs(abs(b).to_double() - 1) < std::ldexp(1.0, -P + 8));
  }
  const BigComplex w = c(0.3, 2);
  CHECK(dist(gamma_plus(w, P) * gamma_plus(c(1) - w, P), c(1)) < 1e-30);
  // ratio of zeta values away from zeros
  for (double tau : {0.0, 3.0, 9.5, 17.0, 27.5}) {
    const BigComplex s = c(0.5, tau);
    CHECK(dist(gamma_plus(s, P), zeta(c(1) - s, P) / zeta(s, P)) < 1e-25);
  }
  try {
    gamma_plus(c(-2), P);
    FAIL("expected PoleHit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleHit);
  }
  CHECK(gamma_plus(c(3), P, GammaPlusForm::Quotient).is_zero());
  CHECK_NOTHROW(gamma_plus(c(-1), P));
}

TEST_CASE("gamma_plus integral representation") {
  for (double tau : {0.0, 2.0, 6.0, 10.0}) {
    const BigComplex g = gamma_plus(c(0.5, tau), P);
    const auto v = gamma_plus_integral({0.5, tau});
    CHECK(std::abs(v - std::complex<double>(g.re.to_double(), g.im.to_double())) < 1e-6);
  }
}

TEST_CASE("A and Z") {
  CHECK(std::abs(big_a(BigFloat(1.0, P), P).to_double() - 1) < 1e-30);
  CHECK(std::abs(big_a(BigFloat(0.5, P), P).to_double() - (2 - std::log(2.0))) < 1e-15);
  CHECK(big_a(BigFloat(1.5, P), P).is_zero());
  for (double t : {0.51, 0.7, 0.99}) CHECK(std::abs(big_a(BigFloat(t, P), P).to_double() - (1 + std::log(t))) < 1e-15);
  CHECK(std::abs(z_mellin(c(0.5), P).re.to_double() - 2.920709017619) < 1e-11);
  CHECK(abs(z_mellin(c(0.5, 14.134725141734693790), P)).to_double() < 1e-8);
  const BigComplex z = z_mellin(c(0.5, 5), P);
  CHECK(std::abs(mellin_of_a({0.5, 5}) - std::complex<double>(z.re.to_double(), z.im.to_double())) < 1e-6);
  for (int k = 0; k <= 30; ++k) {
    const double t = std::ldexp(1.0, -k);
    CHECK(std::abs(big_a(BigFloat(t, P), P).to_double() - 0.5 * std::log(1 / t)) <= 1.0);
  }
}

TEST_CASE("U and V multipliers") {
  CHECK(dist(u_multiplier(c(0.5), P), c(1)) < 1e-30);
  CHECK(dist(v_multiplier(c(0.5), P), c(1)) < 1e-30);
  const BigComplex s = c(0.5, 7);
  const BigComplex r = s / (c(1) - s);
  CHECK(dist(v_multiplier(s, P) / u_multiplier(s, P), r * r) < 1e-30);
  CHECK(std::abs(abs(v_multiplier(c(0.5, 14.134725), P)).to_double() - 1) < 1e-18);
  CHECK_THROWS_AS(v_multiplier(c(1), P), Error);
}

TEST_CASE("contour derivatives") {
  const AnalyticFunction e = [](const BigComplex& w, mpfr_prec_t p) { return exp(with_prec(w, p)); };
  CHECK(dist(dk_dw(e, c(0), 3, P), c(1)) < 1e-20);
  const AnalyticFunction sq = [](const BigComplex& w, mpfr_prec_t p) { return with_prec(w, p) * with_prec(w, p); };
  CHECK(dist(dk_dw(sq, c(1, 1), 1, P), c(2, 2)) < 1e-25);
  const AnalyticFunction gp = [](const BigComplex& w, mpfr_prec_t p) { return gamma_plus(w, p); };
  const BigComplex w = c(0.5, 2);
  const BigComplex h = c(1e-10);
  const BigComplex fd = (gamma_plus(w + h, P) - gamma_plus(w - h, P)) / c(2e-10);
  CHECK(dist(dk_dw(gp, w, 1, P), fd) < 1e-8);
}

TEST_CASE("phi series and quadrature") {
  const BigComplex w = c(0.3);
  const BigFloat t(0.7, P);
  CHECK(dist(phi(w, 0, t, P), phi_quadrature(w, 0, t, P)) < 1e-10);
  const BigComplex w2 = c(0.5, 3);
  CHECK(dist(phi(w2, 1, t, P), phi_quadrature(w2, 1, t, P)) < 1e-10);
  // k = 1 against a central difference of k = 0
  const BigComplex h = c(1e-6);
  const BigComplex fd = (phi(w2 + h, 0, t, P) - phi(w2 - h, 0, t, P)) / c(2e-6);
  CHECK(dist(phi(w2, 1, t, P), fd) < 1e-5);
  for (int k = 0; k <= 20; ++k) {
    const BigFloat tk(std::ldexp(1.0, -k), P);
    const BigComplex lead = u_multiplier(w2, P) * exp(-w2 * log(tk));
    CHECK(abs(phi(w2, 0, tk, P) - lead).to_double() <= 10);
  }
  for (double tv : {1.0, 2.0, 3.0, 4.0})
    CHECK(tv * abs(phi(c(0.4, 1), 0, BigFloat(tv, P), P)).to_double() < 10);
  try {
    phi(w, 0, t, P, 2);
    FAIL("expected SeriesBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SeriesBudgetExceeded);
  }
  CHECK_THROWS_AS(phi(c(1.2), 0, t, P), Error);
  CHECK_THROWS_AS(phi(w, 0, BigFloat(5.0, P), P), Error);
}
