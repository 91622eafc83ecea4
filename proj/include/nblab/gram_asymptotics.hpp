#pragma once

#include <nblab/bigfloat.hpp>

#include <string>
#include <vector>

namespace nblab {

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t n, mpfr_prec_t prec);

  std::size_t dimension() const { return n_; }
  BigComplex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const BigComplex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<BigComplex> a_;
};

/// b* G^{-1} b for Hermitian positive definite G through a Cholesky
/// factorization G = L L*. Throws NotPositiveDefinite when a pivot is not
/// above `pivot_floor` times the largest diagonal entry.
BigFloat hermitian_inverse_form(const ComplexMatrix& g, const std::vector<BigComplex>& b,
                                double pivot_floor = 1e-30);

struct ZeroSpec {
  double tau = 0;  // the zero is 1/2 + i tau
  int multiplicity = 1;
};

/// int_0^L x^j e^{i mu x} dx: exact for mu = 0, forward integration by parts
/// when |mu| L >= j, the power series in i mu L otherwise.
BigComplex log_moment(int j, const BigFloat& mu, const BigFloat& L, mpfr_prec_t prec);

/// V^(a)(rho) for a < m_rho, per zero; V through the Gamma form of gamma_plus.
std::vector<std::vector<BigComplex>> v_derivatives(const std::vector<ZeroSpec>& zeros, mpfr_prec_t prec);

struct GramIndex {
  std::size_t zero = 0;
  int k = 0;
};

struct ModelGram {
  BigFloat L;
  std::vector<GramIndex> index;  // zero-major, then k
  ComplexMatrix entries;
};

/// Leading-order Gram matrix of the rescaled vectors X_{rho,k} on (e^{-L}, 1]:
/// entry = L^{-1-k-l} sum_{a<=k, b<=l} C(k,a) C(l,b) V^(a)(rho1) conj(V^(b)(rho2))
///         log_moment(k-a+l-b, tau1 - tau2, L).
ModelGram model_gram(const std::vector<ZeroSpec>& zeros, const BigFloat& L, mpfr_prec_t prec);
ModelGram model_gram(const std::vector<ZeroSpec>& zeros, const std::vector<std::vector<BigComplex>>& v_derivs,
                     const BigFloat& L, mpfr_prec_t prec);

/// Limit of sqrt(L) (chi_1, X_{rho,k}): (rho-1)/rho^2 for k = 0, zero otherwise.
BigComplex chi1_pairing(const BigComplex& rho, int k, mpfr_prec_t prec);

/// sum m^2 / (1/4 + tau^2).
BigFloat bound_target(const std::vector<ZeroSpec>& zeros, mpfr_prec_t prec);

struct BoundRow {
  double L = 0;
  BigFloat p_times_l;
  BigFloat target;
  BigFloat abs_err;
};

struct BoundReport {
  std::vector<BoundRow> rows;
  BigFloat limit;  // from the last two rows with P L = c + d/L
  BigFloat target;
  std::string model_order = "leading";
};

/// Squared projection P of chi_1 on span{X_{rho,k}} at each L, reported as
/// P L. Throws IllConditioned if the model Gram is not positive definite.
BoundReport bound_estimate(const std::vector<ZeroSpec>& zeros, const std::vector<double>& l_list,
                           mpfr_prec_t prec);

}  // namespace nblab
