#include <nblab/error.hpp>
#include <nblab/gram_asymptotics.hpp>
#include <nblab/special.hpp>

#include <cmath>

namespace nblab {

ComplexMatrix::ComplexMatrix(std::size_t n, mpfr_prec_t prec) : n_(n), a_(n * n, BigComplex(prec)) {
  require(n >= 1, "matrix dimension must be at least 1");
}

BigFloat hermitian_inverse_form(const ComplexMatrix& g, const std::vector<BigComplex>& b, double pivot_floor) {
  const std::size_t n = g.dimension();
  require(b.size() == n, "right-hand side length does not match matrix dimension");
  const mpfr_prec_t prec = g(0, 0).prec();
  BigFloat max_diag(0L, prec);
  for (std::size_t i = 0; i < n; ++i)
    if (g(i, i).re > max_diag) max_diag = g(i, i).re;
  const BigFloat floor_value = max_diag * BigFloat(pivot_floor, prec);

  ComplexMatrix l(n, prec);
  for (std::size_t j = 0; j < n; ++j) {
    BigFloat d = g(j, j).re;
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k).norm();
    if (d <= floor_value)
      throw Error(ErrorKind::NotPositiveDefinite, "Cholesky pivot " + std::to_string(j) + " is not positive",
                  static_cast<long>(j));
    const BigFloat root = sqrt(d);
    l(j, j) = BigComplex(root);
    for (std::size_t i = j + 1; i < n; ++i) {
      BigComplex s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k).conj();
      l(i, j) = s / root;
    }
  }
  BigFloat total(0L, prec);
  std::vector<BigComplex> y(n, BigComplex(prec));
  for (std::size_t i = 0; i < n; ++i) {
    BigComplex s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y[k];
    y[i] = s / l(i, i).re;
    total += y[i].norm();
  }
  return total;
}

BigComplex log_moment(int j, const BigFloat& mu_in, const BigFloat& L_in, mpfr_prec_t prec) {
  require(j >= 0, "log_moment needs j >= 0");
  require(L_in.sign() > 0, "log_moment needs L > 0");
  const mpfr_prec_t wp = prec + 32 + 4 * static_cast<mpfr_prec_t>(j);
  const BigFloat mu = with_prec(mu_in, wp);
  const BigFloat L = with_prec(L_in, wp);
  if (mu.is_zero()) return with_prec(BigComplex(pow(L, static_cast<long>(j + 1)) / static_cast<long>(j + 1)), prec);

  const BigComplex imu(BigFloat(0L, wp), mu);
  const BigFloat mul = abs(mu * L);
  if (mul >= BigFloat(static_cast<long>(j), wp)) {
    const BigComplex e = from_polar(BigFloat(1L, wp), mu * L);
    BigComplex acc = (e - BigComplex(BigFloat(1L, wp))) / imu;
    BigFloat lpow(1L, wp);
    for (int i = 1; i <= j; ++i) {
      lpow *= L;
      acc = (e * lpow - acc * static_cast<long>(i)) / imu;
    }
    return with_prec(acc, prec);
  }
  // sum_m (i mu)^m L^{j+m+1} / (m! (j+m+1))
  BigComplex term_base(pow(L, static_cast<long>(j + 1)));  // (i mu L)^m L^{j+1} / m!
  const BigComplex step = imu * L;
  BigComplex acc(wp);
  const BigFloat eps = pow(BigFloat(2L, wp), -static_cast<long>(wp)) * abs(term_base.re);
  for (long m = 0; m < 100000; ++m) {
    acc += term_base / (j + m + 1);
    term_base = term_base * step / (m + 1);
    if (m > mul.to_double() && abs(term_base) < eps) break;
  }
  return with_prec(acc, prec);
}

std::vector<std::vector<BigComplex>> v_derivatives(const std::vector<ZeroSpec>& zeros, mpfr_prec_t prec) {
  std::vector<std::vector<BigComplex>> out;
  const AnalyticFunction v = [](const BigComplex& w, mpfr_prec_t p) { return v_multiplier(w, p); };
  for (const auto& z : zeros) {
    require(z.tau > 0, "zero ordinate must be positive");
    require(z.multiplicity >= 1, "zero multiplicity must be positive");
    const BigComplex rho(0.5, z.tau, prec);
    std::vector<BigComplex> d;
    d.push_back(v_multiplier(rho, prec));
    for (int a = 1; a < z.multiplicity; ++a) d.push_back(dk_dw(v, rho, a, prec));
    out.push_back(std::move(d));
  }
  return out;
}

ModelGram model_gram(const std::vector<ZeroSpec>& zeros, const BigFloat& L, mpfr_prec_t prec) {
  return model_gram(zeros, v_derivatives(zeros, prec), L, prec);
}

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

ModelGram model_gram(const std::vector<ZeroSpec>& zeros, const std::vector<std::vector<BigComplex>>& v_derivs,
                     const BigFloat& L_in, mpfr_prec_t prec) {
  require(!zeros.empty(), "model_gram needs at least one zero");
  require(v_derivs.size() == zeros.size(), "derivative table does not match the zero list");
  require(L_in.sign() > 0, "L must be positive");
  for (std::size_t i = 0; i < zeros.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) require(zeros[i].tau != zeros[j].tau, "zero ordinates must be distinct");

  const mpfr_prec_t wp = prec + 16;
  const BigFloat L = with_prec(L_in, wp);
  std::vector<GramIndex> index;
  for (std::size_t z = 0; z < zeros.size(); ++z)
    for (int k = 0; k < zeros[z].multiplicity; ++k) index.push_back({z, k});
  const std::size_t n = index.size();

  ModelGram g{L_in, index, ComplexMatrix(n, prec)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto [z1, k] = index[i];
      const auto [z2, l] = index[j];
      const BigFloat mu(zeros[z1].tau - zeros[z2].tau, wp);
      BigComplex acc(wp);
      for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= l; ++b) {
          const BigComplex vv = with_prec(v_derivs[z1][a], wp) * with_prec(v_derivs[z2][b], wp).conj();
          acc += vv * log_moment(k - a + l - b, mu, L, wp) * binomial(k, a) * binomial(l, b);
        }
      acc /= pow(L, static_cast<long>(1 + k + l));
      if (i == j) acc.im = BigFloat(0L, wp);
      g.entries(i, j) = with_prec(acc, prec);
      g.entries(j, i) = with_prec(acc.conj(), prec);
    }
  }
  return g;
}

BigComplex chi1_pairing(const BigComplex& rho, int k, mpfr_prec_t prec) {
  require(k >= 0, "k must be nonnegative");
  require(!rho.is_zero(), "rho must be nonzero");
  if (k > 0) return BigComplex(prec);
  const BigComplex r = with_prec(rho, prec + 16);
  return with_prec((r - BigComplex(BigFloat(1L, prec + 16))) / (r * r), prec);
}

BigFloat bound_target(const std::vector<ZeroSpec>& zeros, mpfr_prec_t prec) {
  BigFloat total(0L, prec);
  for (const auto& z : zeros) {
    const BigFloat tau(z.tau, prec);
    const BigFloat m2(static_cast<long>(z.multiplicity) * z.multiplicity, prec);
    total += m2 / (BigFloat(0.25, prec) + tau * tau);
  }
  return total;
}

BoundReport bound_estimate(const std::vector<ZeroSpec>& zeros, const std::vector<double>& l_list,
                           mpfr_prec_t prec) {
  require(!zeros.empty(), "bound_estimate needs at least one zero");
  require(!l_list.empty(), "L list must be nonempty");
  for (std::size_t i = 0; i < l_list.size(); ++i) {
    require(l_list[i] > 0, "L must be positive");
    if (i > 0) require(l_list[i] > l_list[i - 1], "L list must be strictly ascending");
  }
  const auto derivs = v_derivatives(zeros, prec);
  BoundReport report;
  report.target = bound_target(zeros, prec);
  for (double l_value : l_list) {
    const BigFloat L(l_value, prec);
    const ModelGram g = model_gram(zeros, derivs, L, prec);
    const BigFloat root_l = sqrt(L);
    // The projection solves sum_j c_j (X_j, X_i) = (chi_1, X_i); with the
    // Hermitian G_{ij} = (X_i, X_j) this is b* conj(G)^{-1} b = c* G^{-1} c
    // for c = conj(b).
    std::vector<BigComplex> c;
    for (const auto& idx : g.index) {
      const BigComplex rho(0.5, zeros[idx.zero].tau, prec);
      c.push_back((chi1_pairing(rho, idx.k, prec) / root_l).conj());
    }
    BigFloat p(prec);
    try {
      p = hermitian_inverse_form(g.entries, c);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotPositiveDefinite) throw;
      throw Error(ErrorKind::IllConditioned, "model Gram lost positive definiteness at L = " + std::to_string(l_value));
    }
    BoundRow row{l_value, p * L, report.target, BigFloat(prec)};
    row.abs_err = abs(row.p_times_l - row.target);
    report.rows.push_back(std::move(row));
  }
  if (report.rows.size() >= 2) {
    const auto& a = report.rows[report.rows.size() - 2];
    const auto& b = report.rows.back();
    const BigFloat la(a.L, prec), lb(b.L, prec);
    report.limit = (lb * b.p_times_l - la * a.p_times_l) / (lb - la);
  } else {
    report.limit = report.rows.back().p_times_l;
  }
  return report;
}

}  // namespace nblab
