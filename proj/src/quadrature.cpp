#include <nblab/error.hpp>
#include <nblab/quadrature.hpp>

#include <cmath>
#include <map>
#include <mutex>

namespace nblab {

const GaussRule& gauss_legendre(int n) {
  require(n >= 1 && n <= 512, "Gauss-Legendre order out of range");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const long double pi = 3.141592653589793238462643383279502884L;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    long double x = std::cos(pi * (i + 0.75L) / (n + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    // Recompute the derivative at the converged node for the weight.
    long double p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    const long double w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0;
  return cache.emplace(n, std::move(rule)).first->second;
}

namespace {

// Abscissa u(x) = 1/(1 + e^{-pi sinh x}) with weight du/dx = pi cosh x u (1-u).
struct Node {
  BigFloat u, v, weight;
};

Node node_at(const BigFloat& x, const BigFloat& pi) {
  const BigFloat e = exp(pi * sinh(x));
  const BigFloat one(1L, x.prec());
  Node n{e / (one + e), one / (one + e), BigFloat(x.prec())};
  n.weight = pi * cosh(x) * n.u * n.v;
  return n;
}

}  // namespace

BigComplex tanh_sinh(const UnitIntervalIntegrand& f, mpfr_prec_t prec, const BigFloat& tol,
                     int max_level) {
  const BigFloat pi = const_pi(prec);
  const BigFloat negligible = tol * BigFloat(std::ldexp(1.0, -12), prec);
  const double x_cap = 8.0;
  const double h0 = 0.5;

  auto term = [&](double x) {
    const Node n = node_at(BigFloat(x, prec), pi);
    return f(n.u, n.v) * n.weight;
  };

  // Level 0 fixes the truncation of each tail.
  BigComplex sum = term(0.0);
  double x_hi = 0, x_lo = 0;
  for (int side : {1, -1}) {
    int quiet = 0;
    for (double x = h0; x <= x_cap; x += h0) {
      BigComplex t = term(side * x);
      const bool small = abs(t) < negligible;
      sum += t;
      (side > 0 ? x_hi : x_lo) = x;
      quiet = small ? quiet + 1 : 0;
      if (quiet >= 2) break;
    }
  }
  BigComplex estimate = sum * BigFloat(h0, prec);

  double h = h0;
  for (int level = 1; level <= max_level; ++level) {
    h /= 2;
    for (double x = h; x <= x_hi; x += 2 * h) sum += term(x);
    for (double x = h; x <= x_lo; x += 2 * h) sum += term(-x);
    BigComplex next = sum * BigFloat(h, prec);
    const bool done = level >= 3 && abs(next - estimate) < tol;
    estimate = std::move(next);
    if (done) return estimate;
  }
  throw Error(ErrorKind::NotConverged, "tanh-sinh quadrature did not reach the tolerance");
}

}  // namespace nblab
