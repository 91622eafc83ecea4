#pragma once

#include <nblab/rational.hpp>

#include <complex>
#include <cstddef>
#include <vector>

namespace nblab {

/// Closed interval known to contain a quantity.
struct IntervalValue {
  double lower = 0;
  double upper = 0;

  double mid() const { return (lower + upper) / 2; }
  double width() const { return upper - lower; }
  bool contains(double x) const { return lower <= x && x <= upper; }
};

/// psi'(z) for z > 0 in long double.
long double trigamma(long double z);

/// <rho(a/t), rho(b/t)> = int_0^infinity {a/t}{b/t} dt for 0 < a, b <= 1,
/// integrated piece by piece over [delta, infinity) in x = 1/t, with the
/// head (0, delta) enclosed by Cauchy-Schwarz. delta <= 0 selects the default
/// min(a, b) 1e-7. Throws BudgetExceeded when more than max_pieces
/// breakpoint intervals would be needed.
IntervalValue fracpart_inner(double a, double b, double delta = 0, std::size_t max_pieces = 100'000'000);

/// Same inner product for rational a, b, without truncation. With b >= a
/// and a/b = p/q in lowest terms, the value is b g(p/q) where
///   g = int_0^q h(y)/y^2 dy + q^{-2} int_0^q h(y) psi'(1 + y/q) dy,
///   h(y) = {p y / q}{y},
/// a sum over at most p + q pieces on which h is quadratic.
long double fracpart_inner_periodic(const Rational& a, const Rational& b, std::size_t max_pieces = 50'000'000);

/// <chi, rho(theta/t)> = int_0^1 {theta/t} dt
///   = theta (log(1/theta) + int_0^1 y psi'(1 + y) dy).
long double chi_cross(long double theta);

struct MellinCheck {
  std::complex<double> integral;   // int_0^infinity rho(1/t) t^{s-1} dt
  std::complex<double> expected;   // -zeta(s)/s
  double remainder_bound = 0;      // bound on the dropped Euler-Maclaurin term
  double residual() const { return std::abs(integral - expected); }
};

/// Checks zeta(s)/s = -int_0^infinity rho(1/t) t^{s-1} dt for 0 < Re s < 1:
/// exact on t > 1 and on each (1/(n+1), 1/n] for n < pieces, Euler-Maclaurin
/// for t < 1/pieces.
MellinCheck mellin_fracpart_check(std::complex<double> s, long pieces = 2000);

enum class GridPolicy { Geometric, Arithmetic, Explicit };

/// lambda and finitely many dilations lambda <= theta <= 1. Points are exact
/// rationals k/D, so Gram entries can use the periodic route.
class DilationGrid {
 public:
  /// Default size max(50, ceil(20 log(1/lambda))).
  static std::size_t default_size(double lambda);

  /// Geometric points lambda^{i/(n-1)} snapped to a common denominator D
  /// large enough that neighbouring points stay distinct; duplicates are
  /// dropped and points below lambda are pulled up.
  static DilationGrid geometric(double lambda, std::size_t count = 0);
  static DilationGrid arithmetic(double lambda, std::size_t count = 0);
  static DilationGrid explicit_points(double lambda, std::vector<Rational> thetas);

  double lambda() const { return lambda_; }
  GridPolicy policy() const { return policy_; }
  const std::vector<Rational>& thetas() const { return thetas_; }
  std::size_t size() const { return thetas_.size(); }

 private:
  DilationGrid(double lambda, GridPolicy policy, std::vector<Rational> thetas);

  double lambda_;
  GridPolicy policy_;
  std::vector<Rational> thetas_;
};

struct DistanceEstimate {
  double lambda = 0;
  double d_hat = 0;
  std::size_t grid_size = 0;
  std::size_t rank = 0;      // eigenvalues kept
  double threshold = 0;      // relative truncation used
};

inline constexpr double kDefaultSpectralCut = 9.094947017729282e-13;  // 2^-40

/// Upper bound for the distance from chi to span{rho(theta/t)}: 1 minus the
/// squared projection of chi on the grid span, computed from the eigen
/// decomposition of the Gram matrix with eigenvalues below
/// threshold * max eigenvalue dropped. Throws IllConditioned if none remain.
DistanceEstimate nb_distance(const DilationGrid& grid, double threshold = kDefaultSpectralCut);

struct ScalingRow {
  double lambda = 0;
  double d_hat = 0;
  double d_hat_sqrtlog = 0;
};

std::vector<ScalingRow> scaling_table(const std::vector<double>& lambdas, GridPolicy policy, std::size_t count = 0,
                                      double threshold = kDefaultSpectralCut);

}  // namespace nblab
