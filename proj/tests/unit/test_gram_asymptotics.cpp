#include <nblab/error.hpp>
#include <nblab/gram_asymptotics.hpp>

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"

using namespace nblab;

namespace {

constexpr mpfr_prec_t P = 128;
constexpr double kTau1 = 14.134725141734693790;
constexpr double kTau2 = 21.022039638771554993;
constexpr double kTau3 = 25.010857580145688763;

std::complex<double> cd(const BigComplex& z) { return {z.re.to_double(), z.im.to_double()}; }

}  // namespace

TEST_CASE("log moments") {
  for (double l : {1.0, 2.0, 10.0})
    for (int j = 0; j <= 5; ++j) {
      const BigComplex v = log_moment(j, BigFloat(0L, P), BigFloat(l, P), P);
      CHECK(v.im.is_zero());
      CHECK(v.re == pow(BigFloat(l, P), static_cast<long>(j + 1)) / static_cast<long>(j + 1));
    }
  CHECK(log_moment(1, BigFloat(0L, P), BigFloat(2L, P), P).re == BigFloat(2L, P));
  const BigFloat mu(1.7, P), L(3.0, P);
  const BigComplex imu(BigFloat(0L, P), mu);
  const BigComplex direct = (exp(imu * L) - BigComplex(BigFloat(1L, P))) / imu;
  CHECK(abs(log_moment(0, mu, L, P) - direct).to_double() < 1e-35);
  for (int j : {0, 1, 3, 6})
    for (double m : {-40.0, -3.3, 0.01, 0.7, 12.0, 40.0})
      for (double l : {0.5, 5.0, 100.0, 1000.0}) {
        const auto ref = oracle::log_moment_reference(j, m, l);
        const auto v = cd(log_moment(j, BigFloat(m, P), BigFloat(l, P), P));
        const double scale = std::pow(l, j + 1) / (j + 1);
        CHECK(std::abs(v - std::complex<double>(ref)) / scale < 1e-12);
      }
}

TEST_CASE("model Gram structure") {
  const std::vector<ZeroSpec> one{{kTau1, 1}};
  for (double l : {10.0, 100.0, 1e3, 1e4, 1e5}) {
    const auto g = model_gram(one, BigFloat(l, P), P);
    CHECK(std::abs(g.entries(0, 0).re.to_double() - 1) < std::ldexp(1.0, -P + 12));
  }
  const std::vector<ZeroSpec> two{{kTau1, 1}, {kTau2, 1}};
  for (double l : {1e3, 1e4, 1e5}) {
    const auto g = model_gram(two, BigFloat(l, P), P);
    const double off = abs(g.entries(0, 1)).to_double();
    CHECK(off <= 2 / ((kTau2 - kTau1) * l) * (1 + 1e-12));
    CHECK(abs(g.entries(0, 1) - g.entries(1, 0).conj()).to_double() == 0);
  }
  const std::vector<ZeroSpec> dbl{{kTau1, 2}};
  double prev = 1;
  for (double l : {1e2, 1e3, 1e4, 1e5}) {
    const auto g = model_gram(dbl, BigFloat(l, P), P);
    const double target[2][2] = {{1, 0.5}, {0.5, 1.0 / 3}};
    double worst = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        worst = std::max(worst, std::abs(cd(g.entries(i, j)) - std::complex<double>(target[i][j])));
    CHECK(worst < prev);
    prev = worst;
    if (l >= 1e4) CHECK(worst < 0.01);
  }
  CHECK_THROWS_AS(model_gram({{kTau1, 1}, {kTau1, 1}}, BigFloat(10L, P), P), Error);
}

TEST_CASE("pairings") {
  CHECK(abs(chi1_pairing(BigComplex(0.5, 0, P), 0, P) - BigComplex(-2.0, 0, P)).to_double() < 1e-35);
  const BigComplex rho(0.5, kTau1, P);
  CHECK(std::abs(abs(chi1_pairing(rho, 0, P)).to_double() - 1 / abs(rho).to_double()) < 1e-15);
  CHECK(std::abs(abs(chi1_pairing(rho, 0, P)).to_double() - 0.0707036) < 1e-6);
  CHECK(chi1_pairing(rho, 1, P).is_zero());
  CHECK(chi1_pairing(rho, 3, P).is_zero());
}

TEST_CASE("bound estimates") {
  const double t1 = 1 / (0.25 + kTau1 * kTau1);
  auto r = bound_estimate({{kTau1, 1}}, {1e2, 1e3, 1e4}, P);
  CHECK(r.model_order == "leading");
  CHECK(std::abs(r.target.to_double() - t1) < 1e-18);
  CHECK(std::abs(r.rows.back().p_times_l.to_double() - t1) < 0.01 * t1);
  r = bound_estimate({{kTau1, 2}}, {1e3, 1e4}, P);
  CHECK(std::abs(r.rows.back().p_times_l.to_double() - 4 * t1) < 0.01 * 4 * t1);
  const std::vector<ZeroSpec> three{{kTau1, 1}, {kTau2, 1}, {kTau3, 1}};
  r = bound_estimate(three, {1e3, 1e4}, P);
  double sum = 0;
  for (const auto& z : three) sum += 1 / (0.25 + z.tau * z.tau);
  CHECK(std::abs(r.target.to_double() - sum) < 1e-17);
  CHECK(std::abs(r.rows.back().p_times_l.to_double() - sum) < 0.01 * sum);
  CHECK(std::abs(sum - (0.0049990 + 0.0022615 + 0.0015980)) < 1e-6);
  CHECK_THROWS_AS(bound_estimate(three, {1e4, 1e3}, P), Error);
}

TEST_CASE("Cholesky inverse form") {
  ComplexMatrix g(2, P);
  g(0, 0) = BigComplex(1.0, 0, P);
  g(0, 1) = BigComplex(0.5, 0, P);
  g(1, 0) = BigComplex(0.5, 0, P);
  g(1, 1) = BigComplex(1.0 / 3, 0, P);
  const std::vector<BigComplex> e0{BigComplex(1.0, 0, P), BigComplex(P)};
  CHECK(std::abs(hermitian_inverse_form(g, e0).to_double() - 4) < 1e-14);
  g(1, 1) = BigComplex(0.25, 0, P);
  try {
    hermitian_inverse_form(g, e0);
    FAIL("expected NotPositiveDefinite");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPositiveDefinite);
  }
}
