#pragma once

#include <nblab/bigfloat.hpp>

#include <functional>
#include <vector>

namespace nblab {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<long double> nodes;
  std::vector<long double> weights;
};

/// n-point rule, computed once per n by Newton iteration on P_n and cached.
const GaussRule& gauss_legendre(int n);

/// Integral of f over [a, b] with the n-point Gauss-Legendre rule.
template <class T, class F>
T integrate_gauss(F&& f, long double a, long double b, int n) {
  const GaussRule& rule = gauss_legendre(n);
  const long double half = (b - a) / 2, mid = (a + b) / 2;
  T sum{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += static_cast<T>(rule.weights[i]) * f(mid + half * rule.nodes[i]);
  return sum * static_cast<T>(half);
}

/// Double-exponential (tanh-sinh) quadrature over (0, 1) in arbitrary
/// precision. The integrand may have integrable algebraic singularities at
/// either end; it receives u and 1 - u, the latter computed without
/// cancellation. The step is halved until two successive levels agree to
/// `tol` (absolute); throws NotConverged after `max_level` halvings.
using UnitIntervalIntegrand = std::function<BigComplex(const BigFloat& u, const BigFloat& one_minus_u)>;
BigComplex tanh_sinh(const UnitIntervalIntegrand& f, mpfr_prec_t prec, const BigFloat& tol,
                     int max_level = 12);

}  // namespace nblab
