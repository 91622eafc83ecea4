#include <nblab/error.hpp>
#include <nblab/fracpart.hpp>

#include <doctest.h>

#include <boost/math/special_functions/trigamma.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace nblab;

namespace {

constexpr double kEuler = 0.57721566490153286061;

}  // namespace

TEST_CASE("trigamma") {
  for (long double z : {0.1L, 1.0L, 1.5L, 2.0L, 15.9L, 40.0L})
    CHECK(std::abs(trigamma(z) - boost::math::trigamma(z)) < 1e-17L * trigamma(z));
}

TEST_CASE("inner product of the undilated function") {
  const IntervalValue v = fracpart_inner(1, 1);
  const double closed = std::log(2 * M_PI) - kEuler;
  CHECK(v.contains(closed));
  CHECK(v.width() <= 1e-7);
  CHECK(std::abs(v.mid() - 1.2606610) < 1e-6);
  CHECK(std::abs(static_cast<double>(fracpart_inner_periodic(1, 1)) - closed) < 1e-15);
  CHECK(std::abs(static_cast<double>(oracle::fracpart_reference(1, 1, 1)) - closed) < 1e-14);
}

TEST_CASE("random rational pairs against the quadrature oracle") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> den(2, 40);
  for (int trial = 0; trial < 25; ++trial) {
    const long d = den(rng);
    std::uniform_int_distribution<long> num(1, d);
    const long k1 = num(rng), k2 = num(rng);
    const long double ref = oracle::fracpart_reference(k1, k2, d);
    const long double per = fracpart_inner_periodic(make_rational(k1, d), make_rational(k2, d));
    CHECK(std::abs(per - ref) < 1e-12L);
    const double a = static_cast<double>(k1) / d, b = static_cast<double>(k2) / d;
    const IntervalValue iv = fracpart_inner(a, b, std::min(a, b) * 1e-6);
    CHECK(iv.lower - 1e-8 <= ref);
    CHECK(ref <= iv.upper + 1e-8);
    const long double chi_ref = oracle::chi_reference(a);
    CHECK(std::abs(chi_cross(a) - chi_ref) < 1e-12L);
  }
}

TEST_CASE("symmetry and scaling") {
  CHECK(fracpart_inner_periodic(make_rational(3, 7), make_rational(5, 9)) ==
        fracpart_inner_periodic(make_rational(5, 9), make_rational(3, 7)));
  const IntervalValue ab = fracpart_inner(0.3, 0.8, 1e-6);
  const IntervalValue ba = fracpart_inner(0.8, 0.3, 1e-6);
  CHECK(ab.lower == ba.lower);
  CHECK(ab.upper == ba.upper);
  for (long c : {2L, 3L}) {
    const long double g = fracpart_inner_periodic(make_rational(3, 5), make_rational(4, 5));
    const long double gc = fracpart_inner_periodic(make_rational(3, 5 * c), make_rational(4, 5 * c));
    CHECK(std::abs(gc - g / c) < 1e-15L);
  }
  const IntervalValue half = fracpart_inner(0.5, 0.25, 1e-7);
  const IntervalValue full = fracpart_inner(1.0, 0.5, 2e-7);
  CHECK(half.lower <= full.upper / 2 + 1e-12);
  CHECK(full.lower / 2 <= half.upper + 1e-12);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(fracpart_inner(0, 1), Error);
  CHECK_THROWS_AS(fracpart_inner(1, 1, 0.5), Error);
  try {
    fracpart_inner(1, 1, 1e-9, 1000);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  CHECK_THROWS_AS(fracpart_inner_periodic(make_rational(1, 1000), make_rational(999, 1000), 100), Error);
  CHECK_THROWS_AS(chi_cross(0), Error);
}

TEST_CASE("chi cross values") {
  CHECK(std::abs(chi_cross(1) - (1 - kEuler)) < 1e-17);
  CHECK(std::abs(chi_cross(0.5L) - 0.5579657) < 1e-7);
  CHECK(std::abs(chi_cross(0.5L) - 0.5 * (std::log(2.0) + 1 - kEuler)) < 1e-16);
  long double prev = chi_cross(1);
  for (int k = 1; k <= 30; ++k) {
    const long double th = std::ldexp(1.0L, -k);
    const long double v = chi_cross(th);
    CHECK(v < th * (std::log(1 / th) + 1));
    CHECK(v > 0);
    if (k > 2) CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("Mellin identity") {
  const MellinCheck half = mellin_fracpart_check({0.5, 0});
  CHECK(std::abs(half.integral.real() - 2.9207090) < 1e-6);
  CHECK(half.residual() < 1e-6);
  for (auto s : {std::complex<double>(0.5, 1), {0.7, 0}, {0.5, 14.134725}, {0.2, 5}, {0.5, 30}})
    CHECK(mellin_fracpart_check(s).residual() < 1e-6);
  CHECK_THROWS_AS(mellin_fracpart_check({1.2, 0}), Error);
}

TEST_CASE("grids") {
  CHECK(DilationGrid::default_size(0.5) == 50);
  CHECK(DilationGrid::default_size(1e-3) == 139);
  const auto g = DilationGrid::geometric(0.01);
  CHECK(g.size() == 93);
  CHECK(g.thetas().back() == 1);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g.thetas()[i].get_d() >= 0.01 * (1 - 1e-12));
    if (i > 0) CHECK(g.thetas()[i - 1] < g.thetas()[i]);
  }
  const auto a = DilationGrid::arithmetic(0.2, 9);
  CHECK(a.size() == 9);
  CHECK(a.thetas().front().get_d() >= 0.2 * (1 - 1e-12));
  CHECK(a.thetas().front().get_d() < 0.21);
  CHECK(DilationGrid::geometric(1).size() == 1);
  CHECK_THROWS_AS(DilationGrid::explicit_points(0.5, {make_rational(1, 4)}), Error);
  CHECK_THROWS_AS(DilationGrid::explicit_points(0.5, {Rational(1), Rational(1)}), Error);
}

TEST_CASE("distance estimates") {
  const double g1 = std::log(2 * M_PI) - kEuler;
  const double expected = std::sqrt(1 - (1 - kEuler) * (1 - kEuler) / g1);
  const auto one = nb_distance(DilationGrid::geometric(1));
  CHECK(std::abs(one.d_hat - expected) < 1e-12);
  CHECK(std::abs(one.d_hat - 0.92640) < 1e-4);
  CHECK(one.rank == 1);

  const Rational th = make_rational(2, 3);
  const double single = nb_distance(DilationGrid::explicit_points(0.5, {th})).d_hat;
  const long double chi = chi_cross(2.0L / 3), gg = fracpart_inner_periodic(th, th);
  CHECK(std::abs(single - std::sqrt(static_cast<double>(1 - chi * chi / gg))) < 1e-12);

  const double two = nb_distance(DilationGrid::explicit_points(0.5, {make_rational(1, 2), Rational(1)})).d_hat;
  CHECK(two < one.d_hat);
  // supersets never do worse
  std::vector<Rational> small{make_rational(1, 3), make_rational(1, 2), Rational(1)};
  std::vector<Rational> large = small;
  for (long k : {2L, 5L, 7L}) large.push_back(make_rational(k, 9));
  const double ds = nb_distance(DilationGrid::explicit_points(0.2, small)).d_hat;
  const double dl = nb_distance(DilationGrid::explicit_points(0.2, large)).d_hat;
  CHECK(dl <= ds + 1e-12);

  const auto rows = scaling_table({0.5, 0.9}, GridPolicy::Geometric, 10);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].lambda == 0.5);
  CHECK(rows[0].d_hat <= rows[1].d_hat + 1e-12);
  CHECK(std::abs(rows[1].d_hat_sqrtlog - rows[1].d_hat * std::sqrt(std::log(1 / 0.9))) < 1e-15);
  CHECK(rows[1].d_hat < expected);
  CHECK_THROWS_AS(nb_distance(DilationGrid::geometric(1), 1.5), Error);
}
