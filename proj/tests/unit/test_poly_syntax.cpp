#include <nblab/error.hpp>
#include <nblab/poly_syntax.hpp>

#include <doctest.h>

using namespace nblab;

namespace {

GaussianRational gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }
CirclePolynomial poly(std::vector<GaussianRational> c) { return CirclePolynomial(std::move(c)); }

}  // namespace

TEST_CASE("products of linear factors") {
  auto p = parse_polynomial("(1-z)^2");
  CHECK(p.poly == poly({gr(1), gr(-2), gr(1)}));
  REQUIRE(p.roots.size() == 1);
  CHECK(p.roots[0].alpha == gr(1));
  CHECK(p.roots[0].multiplicity == 2);
  CHECK(p.unit_roots);

  p = parse_polynomial("(1-z)(1+z)");
  CHECK(p.poly == poly({gr(1), gr(0), gr(-1)}));
  CHECK(p.roots.size() == 2);

  p = parse_polynomial("(1 - z) * (1 - z)");
  CHECK(p.roots.size() == 1);
  CHECK(p.roots[0].multiplicity == 2);

  p = parse_polynomial("(1-i*z)");
  CHECK(p.poly == poly({gr(1), gr(0, -1)}));
  CHECK(p.roots[0].alpha == gr(0, -1));

  p = parse_polynomial("(1-(3/5+4/5*i)*z)");
  CHECK(p.unit_roots);
  CHECK(p.roots[0].alpha == GaussianRational(make_rational(3, 5), make_rational(-4, 5)));
  CHECK(expand_q(p.roots) == p.poly);
}

TEST_CASE("other forms") {
  auto p = parse_polynomial("1");
  CHECK(p.poly == poly({gr(1)}));
  CHECK(!p.unit_roots);
  p = parse_polynomial("z");
  CHECK(p.poly == poly({gr(0), gr(1)}));
  CHECK(p.z_power == 1);
  p = parse_polynomial("1-z/2");
  CHECK(p.poly == poly({gr(1), GaussianRational(make_rational(-1, 2))}));
  CHECK(!p.unit_roots);
  CHECK(p.roots.empty());
  p = parse_polynomial("1-2z");
  CHECK(p.poly == poly({gr(1), gr(-2)}));
  p = parse_polynomial("z^2(1-z)");
  CHECK(p.poly == poly({gr(0), gr(0), gr(1), gr(-1)}));
  CHECK(p.unit_roots);
  CHECK(p.z_power == 2);
}

TEST_CASE("rejections") {
  for (const char* bad : {"", "(1-q)", "(1-z", "(1-z)^0", "1-0*z", "x", "(1-z)/2", "(1-1/0*z)"})
    CHECK_THROWS_AS(parse_polynomial(bad), Error);
}

TEST_CASE("lists") {
  CHECK(parse_long_list("64,128, 256") == std::vector<long>{64, 128, 256});
  CHECK(parse_double_list("1e-1,0.5") == std::vector<double>{0.1, 0.5});
  CHECK_THROWS_AS(parse_long_list("1,,2"), Error);
  CHECK_THROWS_AS(parse_long_list("1.5"), Error);
  CHECK_THROWS_AS(parse_double_list(""), Error);
}
