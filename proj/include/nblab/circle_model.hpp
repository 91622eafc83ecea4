#pragma once

#include <nblab/bigfloat.hpp>
#include <nblab/rational.hpp>

#include <vector>

namespace nblab {

/// Polynomial in z with exact coefficients; index = power of z. Trailing
/// zeros are stripped, the zero polynomial is the single coefficient 0.
class CirclePolynomial {
 public:
  CirclePolynomial() : c_{GaussianRational(0)} {}
  explicit CirclePolynomial(std::vector<GaussianRational> coefficients);

  std::size_t degree() const { return c_.size() - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
  const std::vector<GaussianRational>& coefficients() const { return c_; }
  /// Coefficient of z^n, zero beyond the degree.
  GaussianRational operator[](long n) const;
  GaussianRational operator()(const GaussianRational& z) const;

  friend CirclePolynomial operator*(const CirclePolynomial& a, const CirclePolynomial& b);
  friend bool operator==(const CirclePolynomial&, const CirclePolynomial&) = default;

 private:
  std::vector<GaussianRational> c_;
};

/// sum_n a_n conj(b_n): the inner product of L^2(d theta / 2 pi) in which
/// the monomials are orthonormal.
GaussianRational inner(const CirclePolynomial& a, const CirclePolynomial& b);
Rational norm_sq(const CirclePolynomial& p);

struct RootSpec {
  GaussianRational alpha;  // |alpha|^2 = 1 exactly
  int multiplicity = 1;
};

struct PredictionResult {
  long n = 0;
  Rational value;                             // E(N, P)
  std::vector<GaussianRational> coefficients;  // optimal A, degree <= N
};

/// Q(z) = prod (1 - conj(alpha) z)^{m_alpha}. Throws NotUnitCircle when
/// |alpha|^2 != 1 and InvalidArgument on repeated roots.
CirclePolynomial expand_q(const std::vector<RootSpec>& roots);

/// c_r = sum_j q_j conj(q_{j+r}) for r = 0..deg Q.
std::vector<GaussianRational> autocorrelation(const CirclePolynomial& q);

/// E(N, P) = inf over deg A <= N of |P - Q A|^2, exactly, from the Toeplitz
/// normal equations T x = r with T_{jk} = c_{k-j}, r_j = sum_i p_i conj(q_{i-j}).
PredictionResult prediction_error(const CirclePolynomial& p, const CirclePolynomial& q, long n);

/// Y^N_{alpha,k}: coefficient of z^n is n(n-1)...(n-k+1) conj(alpha)^{n-k}
/// for k <= n <= N+q.
CirclePolynomial spanning_vector(const GaussianRational& alpha, int k, long n, long q);

/// E(N, P) through the complement W_N = span{Y^N_{alpha,k}, k < m_alpha} of
/// Q P_N inside P_{N+q}: the squared norm of the projection of P on W_N.
/// Needs deg P <= N + q; costs a q x q solve whatever N is.
Rational prediction_error_spanning(const CirclePolynomial& p, const std::vector<RootSpec>& roots, long n);

struct RatePoint {
  long n = 0;
  Rational e;
  Rational n_times_e;
};

struct RateSequence {
  std::vector<RatePoint> points;
  Rational limit;  // Richardson estimate from the last two points, N E = c + d/N
};

/// N E(N, P) over an ascending list of N through the spanning route.
RateSequence rate_sequence(const CirclePolynomial& p, const std::vector<RootSpec>& roots,
                           const std::vector<long>& n_list);

/// Same through the Toeplitz route; works for any nonzero Q.
RateSequence rate_sequence(const CirclePolynomial& p, const CirclePolynomial& q,
                           const std::vector<long>& n_list);

Rational richardson_first_order(long n1, const Rational& v1, long n2, const Rational& v2);

/// Floating path for unit roots that are not Gaussian rationals.
struct NumericRoot {
  BigComplex alpha;
  int multiplicity = 1;
};

std::vector<BigComplex> expand_q_numeric(const std::vector<NumericRoot>& roots, mpfr_prec_t prec);
BigFloat prediction_error_numeric(const std::vector<BigComplex>& p, const std::vector<BigComplex>& q,
                                  long n, mpfr_prec_t prec);

}  // namespace nblab
