#pragma once

#include <nblab/bigfloat.hpp>

#include <complex>
#include <cstddef>
#include <functional>

namespace nblab {

inline constexpr mpfr_prec_t kDefaultPrec = 128;

/// Riemann zeta for Re s > 0, s != 1, via the Borwein acceleration of the
/// alternating eta series. The term count grows like (prec ln 2 + pi |Im s|)
/// / ln(3 + sqrt 8); the sum runs with prec + 32 + 2 log2(n) bits, so the
/// absolute error is below 2^-prec for |Im s| up to a few hundred.
BigComplex zeta(const BigComplex& s, mpfr_prec_t prec);

/// Principal log Gamma (Stirling series after an upward shift, reflection
/// for Re z < 1/2). Throws PoleHit at non-positive integers.
BigComplex log_gamma(const BigComplex& z, mpfr_prec_t prec);
BigComplex gamma(const BigComplex& z, mpfr_prec_t prec);

enum class GammaPlusForm {
  Product,   // 2^{1-s} pi^{-s} cos(pi s/2) Gamma(s)
  Quotient,  // pi^{1/2-s} Gamma(s/2) / Gamma((1-s)/2)
  Auto,      // product form except at negative odd integers
};

/// The Tate factor, equal to zeta(1-s)/zeta(s). Poles at 0, -2, -4, ...
BigComplex gamma_plus(const BigComplex& s, mpfr_prec_t prec, GammaPlusForm form = GammaPlusForm::Auto);

/// A(t) = n log t + log n! + n with n = floor(1/t); zero for t > 1.
BigFloat big_a(const BigFloat& t, mpfr_prec_t prec);

/// Z(s) = (s-1) zeta(s) / s^2, the Mellin transform of A.
BigComplex z_mellin(const BigComplex& s, mpfr_prec_t prec);

/// U(w) = w/(1-w) gamma_plus(w) and V(w) = (w/(1-w))^3 gamma_plus(w),
/// always through the Gamma form so that they stay regular at zeta zeros.
BigComplex u_multiplier(const BigComplex& w, mpfr_prec_t prec);
BigComplex v_multiplier(const BigComplex& w, mpfr_prec_t prec);

using AnalyticFunction = std::function<BigComplex(const BigComplex&, mpfr_prec_t)>;

struct ContourOptions {
  double radius = 1.0 / 16;
  int nodes = 64;
};

/// k-th derivative by the trapezoidal rule on the circle |z - w| = r:
/// f^(k)(w) ~ k!/(M r^k) sum_j f(w + r e^{i theta_j}) e^{-i k theta_j}.
/// f is sampled with 20 + 4k guard bits. The node count is doubled until
/// two estimates agree to 2^-prec (relative to max(1, |f^(k)|)); NotConverged
/// after two failed doublings.
BigComplex dk_dw(const AnalyticFunction& f, const BigComplex& w, int k, mpfr_prec_t prec,
                 ContourOptions opt = {});

/// Number of series terms phi() needs for t at the given precision.
std::size_t phi_series_terms(double t, mpfr_prec_t prec);

/// phi_{w,k}(t) from the sine-series representation
///   (d/dw)^k (U(w) t^{-w}) - [k = 0] sin(2 pi t)/(pi t)
///     + 2 (-1)^k k! sum_{j=1..J} (-1)^j (2 pi t)^{2j}/(2j+1)! 2j/(w+2j)^{k+1}.
/// Requires 0 < Re w < 1 and 0 < t <= 4. The series is summed with
/// 2 pi t log2(e) + 16 guard bits against cancellation. Throws
/// SeriesBudgetExceeded if J < phi_series_terms(t, prec).
BigComplex phi(const BigComplex& w, int k, const BigFloat& t, mpfr_prec_t prec, std::size_t J);
BigComplex phi(const BigComplex& w, int k, const BigFloat& t, mpfr_prec_t prec);

/// The same function from its integral form
///   (d/dw)^k (U(w) t^{-w})
///     - (1/(pi t)) int_0^1 (w log^k u + k log^{k-1} u) u^{w-2} sin(2 pi t u) du,
/// integrated by tanh-sinh. Valid for every t > 0.
BigComplex phi_quadrature(const BigComplex& w, int k, const BigFloat& t, mpfr_prec_t prec);

/// (1-s)/pi int_0^infinity t^{s-2} sin(2 pi t) dt for 0 < Re s < 1: the
/// series on [0, 1], half-period Gauss-Legendre panels on [1, C] and an
/// integration-by-parts expansion of the oscillatory tail beyond C.
std::complex<double> gamma_plus_integral(std::complex<double> s, double cutoff = 1e4);

/// int_0^1 A(t) t^{s-1} dt, exact on each (1/(n+1), 1/n] for n < N and an
/// Euler-Maclaurin model of A for t < 1/N.
std::complex<double> mellin_of_a(std::complex<double> s, long pieces = 10000);

}  // namespace nblab
