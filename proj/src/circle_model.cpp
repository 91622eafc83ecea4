#include <nblab/circle_model.hpp>
#include <nblab/error.hpp>
#include <nblab/exact_linalg.hpp>
#include <nblab/gram_asymptotics.hpp>

#include <algorithm>

namespace nblab {

CirclePolynomial::CirclePolynomial(std::vector<GaussianRational> coefficients) : c_(std::move(coefficients)) {
  while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) c_.emplace_back(0);
}

GaussianRational CirclePolynomial::operator[](long n) const {
  if (n < 0 || n >= static_cast<long>(c_.size())) return GaussianRational(0);
  return c_[static_cast<std::size_t>(n)];
}

GaussianRational CirclePolynomial::operator()(const GaussianRational& z) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

CirclePolynomial operator*(const CirclePolynomial& a, const CirclePolynomial& b) {
  std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return CirclePolynomial(std::move(c));
}

GaussianRational inner(const CirclePolynomial& a, const CirclePolynomial& b) {
  GaussianRational acc;
  const std::size_t n = std::min(a.coefficients().size(), b.coefficients().size());
  for (std::size_t i = 0; i < n; ++i) acc += a.coefficients()[i] * b.coefficients()[i].conj();
  return acc;
}

Rational norm_sq(const CirclePolynomial& p) {
  Rational acc = 0;
  for (const auto& c : p.coefficients()) acc += c.norm();
  return acc;
}

CirclePolynomial expand_q(const std::vector<RootSpec>& roots) {
  require(!roots.empty(), "expand_q needs at least one root");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    require(roots[i].multiplicity >= 1, "root multiplicity must be positive");
    if (roots[i].alpha.norm() != 1)
      throw Error(ErrorKind::NotUnitCircle, "root " + to_string(roots[i].alpha) + " is not on the unit circle");
    for (std::size_t j = 0; j < i; ++j)
      require(!(roots[i].alpha == roots[j].alpha), "roots must be pairwise distinct");
  }
  CirclePolynomial q({GaussianRational(1)});
  for (const auto& r : roots) {
    const CirclePolynomial factor({GaussianRational(1), -r.alpha.conj()});
    for (int m = 0; m < r.multiplicity; ++m) q = q * factor;
  }
  return q;
}

std::vector<GaussianRational> autocorrelation(const CirclePolynomial& q) {
  require(!q.is_zero(), "autocorrelation of the zero polynomial");
  const long d = static_cast<long>(q.degree());
  std::vector<GaussianRational> c(d + 1);
  for (long r = 0; r <= d; ++r)
    for (long j = 0; j + r <= d; ++j) c[r] += q[j] * q[j + r].conj();
  return c;
}

PredictionResult prediction_error(const CirclePolynomial& p, const CirclePolynomial& q, long n) {
  require(n >= 0, "N must be nonnegative");
  require(!q.is_zero(), "Q must be nonzero");
  const auto c = autocorrelation(q);
  const long d = static_cast<long>(q.degree());
  const std::size_t dim = static_cast<std::size_t>(n + 1);

  HermitianMatrix t(dim);
  for (long j = 0; j <= n; ++j)
    for (long k = j; k <= n && k - j <= d; ++k) t.set(j, k, c[k - j]);

  std::vector<GaussianRational> rhs(dim);
  const long dp = static_cast<long>(p.degree());
  for (long j = 0; j <= n; ++j)
    for (long i = j; i <= std::min(dp, j + d); ++i) rhs[j] += p[i] * q[i - j].conj();

  PredictionResult result;
  result.n = n;
  result.coefficients = solve_hermitian(t, rhs);
  GaussianRational projected;
  for (std::size_t i = 0; i < dim; ++i) projected += rhs[i].conj() * result.coefficients[i];
  result.value = norm_sq(p) - projected.re;
  return result;
}

CirclePolynomial spanning_vector(const GaussianRational& alpha, int k, long n, long q) {
  require(k >= 0, "k must be nonnegative");
  require(n + q >= k, "N + q must be at least k");
  const long top = n + q;
  const GaussianRational ab = alpha.conj();
  std::vector<GaussianRational> c(static_cast<std::size_t>(top + 1));
  GaussianRational power(1);  // conj(alpha)^{m-k}
  for (long m = k; m <= top; ++m) {
    BigInt falling = 1;
    for (long i = 0; i < k; ++i) falling *= m - i;
    c[m] = power * GaussianRational(Rational(falling));
    power *= ab;
  }
  return CirclePolynomial(std::move(c));
}

namespace {

// Gram entry <Y_{a,k}, Y_{b,l}> = sum_n n^(k) n^(l) conj(a)^{n-k} b^{n-l}
// without materializing the vectors.
GaussianRational spanning_gram(const GaussianRational& a, int k, const GaussianRational& b, int l, long top) {
  const GaussianRational ratio = a.conj() * b;
  const int lo = std::max(k, l);
  GaussianRational acc;
  // term(n) = n^(k) n^(l) conj(a)^{n-k} b^{n-l}; start at n = lo.
  GaussianRational power = pow(a.conj(), static_cast<unsigned long>(lo - k)) *
                           pow(b, static_cast<unsigned long>(lo - l));
  for (long m = lo; m <= top; ++m) {
    BigInt fk = 1, fl = 1;
    for (int i = 0; i < k; ++i) fk *= m - i;
    for (int i = 0; i < l; ++i) fl *= m - i;
    acc += power * GaussianRational(Rational(fk * fl));
    power *= ratio;
  }
  return acc;
}

}  // namespace

Rational prediction_error_spanning(const CirclePolynomial& p, const std::vector<RootSpec>& roots, long n) {
  require(n >= 0, "N must be nonnegative");
  const CirclePolynomial qpoly = expand_q(roots);
  const long q = static_cast<long>(qpoly.degree());
  const long top = n + q;
  require(static_cast<long>(p.degree()) <= top, "spanning route needs deg P <= N + q");

  std::vector<std::pair<GaussianRational, int>> basis;
  for (const auto& r : roots)
    for (int k = 0; k < r.multiplicity; ++k) basis.emplace_back(r.alpha, k);
  const std::size_t dim = basis.size();

  // G_{ij} = <Y_j, Y_i>, b_i = <P, Y_i>.
  HermitianMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j)
      g.set(i, j, spanning_gram(basis[j].first, basis[j].second, basis[i].first, basis[i].second, top));
  std::vector<GaussianRational> b(dim);
  for (std::size_t i = 0; i < dim; ++i)
    b[i] = inner(p, spanning_vector(basis[i].first, basis[i].second, n, q));
  return projection_norm_sq(g, b);
}

Rational richardson_first_order(long n1, const Rational& v1, long n2, const Rational& v2) {
  require(n2 != n1, "Richardson needs two distinct N");
  return (Rational(n2) * v2 - Rational(n1) * v1) / Rational(n2 - n1);
}

namespace {

template <class ErrorAt>
RateSequence assemble_rates(const std::vector<long>& n_list, ErrorAt&& error_at) {
  require(n_list.size() >= 2, "rate_sequence needs at least two N");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    require(n_list[i] > n_list[i - 1], "N list must be strictly ascending");
  require(n_list.front() >= 1, "N must be positive");
  RateSequence seq;
  for (long n : n_list) {
    RatePoint pt;
    pt.n = n;
    pt.e = error_at(n);
    pt.n_times_e = Rational(n) * pt.e;
    seq.points.push_back(std::move(pt));
  }
  const auto& a = seq.points[seq.points.size() - 2];
  const auto& b = seq.points.back();
  seq.limit = richardson_first_order(a.n, a.n_times_e, b.n, b.n_times_e);
  return seq;
}

}  // namespace

RateSequence rate_sequence(const CirclePolynomial& p, const std::vector<RootSpec>& roots,
                           const std::vector<long>& n_list) {
  return assemble_rates(n_list, [&](long n) { return prediction_error_spanning(p, roots, n); });
}

RateSequence rate_sequence(const CirclePolynomial& p, const CirclePolynomial& q, const std::vector<long>& n_list) {
  return assemble_rates(n_list, [&](long n) { return prediction_error(p, q, n).value; });
}

std::vector<BigComplex> expand_q_numeric(const std::vector<NumericRoot>& roots, mpfr_prec_t prec) {
  require(!roots.empty(), "expand_q needs at least one root");
  const BigFloat tol = pow(BigFloat(2L, prec), -static_cast<long>(prec) + 8);
  std::vector<BigComplex> q{BigComplex(BigFloat(1L, prec))};
  for (const auto& r : roots) {
    require(r.multiplicity >= 1, "root multiplicity must be positive");
    if (abs(abs(r.alpha) - BigFloat(1L, prec)) > tol)
      throw Error(ErrorKind::NotUnitCircle, "root " + to_string(r.alpha, 12) + " is not on the unit circle");
    const BigComplex a = with_prec(r.alpha, prec).conj();
    for (int m = 0; m < r.multiplicity; ++m) {
      std::vector<BigComplex> next(q.size() + 1, BigComplex(prec));
      for (std::size_t i = 0; i < q.size(); ++i) {
        next[i] += q[i];
        next[i + 1] -= q[i] * a;
      }
      q = std::move(next);
    }
  }
  return q;
}

BigFloat prediction_error_numeric(const std::vector<BigComplex>& p, const std::vector<BigComplex>& q, long n,
                                  mpfr_prec_t prec) {
  require(n >= 0, "N must be nonnegative");
  require(!q.empty(), "Q must be nonzero");
  const long d = static_cast<long>(q.size()) - 1;
  const long dp = static_cast<long>(p.size()) - 1;
  const std::size_t dim = static_cast<std::size_t>(n + 1);
  auto coef = [](const std::vector<BigComplex>& v, long i, mpfr_prec_t pr) {
    return (i < 0 || i >= static_cast<long>(v.size())) ? BigComplex(pr) : with_prec(v[i], pr);
  };
  std::vector<BigComplex> c(d + 1, BigComplex(prec));
  for (long r = 0; r <= d; ++r)
    for (long j = 0; j + r <= d; ++j) c[r] += coef(q, j, prec) * coef(q, j + r, prec).conj();

  ComplexMatrix t(dim, prec);
  for (long j = 0; j <= n; ++j)
    for (long k = 0; k <= n; ++k) {
      const long lag = k - j;
      if (lag > d || -lag > d) continue;
      t(j, k) = lag >= 0 ? c[lag] : c[-lag].conj();
    }
  std::vector<BigComplex> rhs(dim, BigComplex(prec));
  for (long j = 0; j <= n; ++j)
    for (long i = j; i <= std::min(dp, j + d); ++i) rhs[j] += coef(p, i, prec) * coef(q, i - j, prec).conj();

  BigFloat norm(0L, prec);
  for (long i = 0; i <= dp; ++i) norm += coef(p, i, prec).norm();
  return norm - hermitian_inverse_form(t, rhs);
}

}  // namespace nblab
