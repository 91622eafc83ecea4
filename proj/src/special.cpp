#include <nblab/error.hpp>
#include <nblab/quadrature.hpp>
#include <nblab/special.hpp>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

namespace nblab {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kPi = 3.14159265358979323846;

BigComplex one(mpfr_prec_t prec) { return BigComplex(BigFloat(1L, prec)); }

bool is_nonpositive_integer(const BigComplex& z) {
  return z.im.is_zero() && z.re.is_integer() && z.re.sign() <= 0;
}

bool equals_one(const BigComplex& z) {
  return z.im.is_zero() && z.re == BigFloat(1L, z.prec());
}

// B_0, B_2, B_4, ... from sum_{j<=n} C(n+1, j) B_j = 0, cached.
const Rational& bernoulli_even(std::size_t m) {
  static std::mutex mu;
  static std::vector<Rational> all{Rational(1)};  // B_0, B_1, B_2, ...
  std::lock_guard<std::mutex> lock(mu);
  const std::size_t need = 2 * m;
  while (all.size() <= need) {
    const std::size_t n = all.size();
    Rational acc = 0;
    BigInt binom = 1;  // C(n+1, j)
    for (std::size_t j = 0; j < n; ++j) {
      acc += binom * all[j];
      binom = binom * BigInt(static_cast<unsigned long>(n + 1 - j)) / BigInt(static_cast<unsigned long>(j + 1));
    }
    all.push_back(-acc / Rational(static_cast<unsigned long>(n + 1)));
  }
  return all[need];
}

BigComplex stirling(const BigComplex& z, mpfr_prec_t wp) {
  const BigFloat half(0.5, wp);
  BigComplex lz = log(z);
  BigComplex s = (z - BigComplex(half)) * lz - z;
  s.re += log(const_pi(wp) * 2L) / 2L;
  const BigComplex inv = one(wp) / z;
  const BigComplex inv2 = inv * inv;
  BigComplex power = inv;
  const BigFloat eps = pow(BigFloat(2L, wp), -static_cast<long>(wp));
  BigFloat last(0L, wp);
  for (std::size_t m = 1; m < 4 * static_cast<std::size_t>(wp); ++m) {
    BigComplex term = power * BigFloat(bernoulli_even(m), wp);
    term /= static_cast<long>(2 * m * (2 * m - 1));
    const BigFloat mag = abs(term);
    if (m > 1 && mag > last) break;  // the asymptotic series started to diverge
    s += term;
    if (mag < eps * abs(s)) break;
    last = mag;
    power *= inv2;
  }
  return s;
}

}  // namespace

BigComplex log_gamma(const BigComplex& z_in, mpfr_prec_t prec) {
  if (is_nonpositive_integer(z_in))
    throw Error(ErrorKind::PoleHit, "Gamma pole at " + z_in.re.to_string(6));
  const mpfr_prec_t wp = prec + 32;
  const BigComplex z = with_prec(z_in, wp);
  if (z.re < BigFloat(0.5, wp)) {
    const BigFloat pi = const_pi(wp);
    BigComplex r = BigComplex(log(pi)) - log(sin(z * pi)) - log_gamma(one(wp) - z, prec);
    return with_prec(r, prec);
  }
  const double target = 0.12 * static_cast<double>(wp) + 4;
  const long shift = std::max(0L, static_cast<long>(std::ceil(target - z.re.to_double())));
  BigComplex acc(wp);
  BigComplex zz = z;
  for (long j = 0; j < shift; ++j) {
    acc += log(zz);
    zz.re += BigFloat(1L, wp);
  }
  return with_prec(stirling(zz, wp) - acc, prec);
}

BigComplex gamma(const BigComplex& z, mpfr_prec_t prec) {
  return with_prec(exp(log_gamma(z, prec + 16)), prec);
}

BigComplex zeta(const BigComplex& s_in, mpfr_prec_t prec) {
  require(s_in.re.sign() > 0, "zeta requires Re s > 0");
  if (equals_one(s_in)) throw Error(ErrorKind::PoleAtOne, "zeta has a pole at s = 1");
  const double t = std::fabs(s_in.im.to_double());
  const long n = static_cast<long>(std::ceil(
      (static_cast<double>(prec) * kLn2 + kPi * t + std::log1p(2 * t) + 10) / std::log(3 + std::sqrt(8.0))));
  const mpfr_prec_t wp = prec + 32 + 2 * static_cast<mpfr_prec_t>(std::ceil(std::log2(n + 1.0)));
  const BigComplex s = with_prec(s_in, wp);

  // d_k = sum_{i<=k} e_i, e_{i+1}/e_i = 2 (n+i)(n-i) / ((2i+1)(i+1)).
  std::vector<BigFloat> d;
  d.reserve(n + 1);
  BigFloat e(1L, wp);
  BigFloat acc(1L, wp);
  d.push_back(acc);
  for (long i = 0; i < n; ++i) {
    e *= 2 * (n + i);
    e *= n - i;
    e /= (2 * i + 1) * (i + 1);
    acc += e;
    d.push_back(acc);
  }
  const BigFloat& dn = d[n];
  BigComplex sum(wp);
  for (long k = 0; k < n; ++k) {
    const BigFloat lk = log(BigFloat(k + 1, wp));
    BigComplex term = exp(-(s * lk)) * (d[k] - dn);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const BigComplex eta = -(sum / dn);
  const BigComplex factor = one(wp) - exp((one(wp) - s) * const_log2(wp));
  return with_prec(eta / factor, prec);
}

BigComplex gamma_plus(const BigComplex& s_in, mpfr_prec_t prec, GammaPlusForm form) {
  const mpfr_prec_t wp = prec + 32;
  const BigComplex s = with_prec(s_in, wp);
  const bool integer = is_nonpositive_integer(s);
  if (integer) {
    const BigFloat half = s.re / 2L;
    if (half.is_integer()) throw Error(ErrorKind::PoleHit, "gamma_plus pole at " + s.re.to_string(6));
    if (form == GammaPlusForm::Product)
      throw Error(ErrorKind::PoleHit, "product form singular at " + s.re.to_string(6));
    form = GammaPlusForm::Quotient;
  }
  if (form == GammaPlusForm::Auto) form = GammaPlusForm::Product;

  const BigFloat pi = const_pi(wp);
  const BigComplex log_pi(log(pi));
  if (form == GammaPlusForm::Product) {
    BigComplex e = (one(wp) - s) * const_log2(wp) - s * log_pi.re + log_gamma(s, wp);
    return with_prec(exp(e) * cos(s * pi / 2L), prec);
  }
  const BigComplex lower = (one(wp) - s) / 2L;
  if (is_nonpositive_integer(lower)) return BigComplex(prec);  // zero of gamma_plus at s = 1, 3, 5, ...
  BigComplex e = (BigComplex(BigFloat(0.5, wp)) - s) * log_pi.re + log_gamma(s / 2L, wp) - log_gamma(lower, wp);
  return with_prec(exp(e), prec);
}

BigFloat big_a(const BigFloat& t_in, mpfr_prec_t prec) {
  require(t_in.sign() > 0, "A(t) requires t > 0");
  // Enough bits to floor 1/t correctly and to absorb the cancellation
  // between n log t and log n!.
  const long mag = std::max(0L, static_cast<long>(mpfr_get_exp(t_in.raw())) * -1);
  const mpfr_prec_t wp = prec + 64 + 2 * mag + t_in.prec();
  const BigFloat t = with_prec(t_in, wp);
  BigFloat inv(wp);
  mpfr_ui_div(inv.raw(), 1, t.raw(), MPFR_RNDD);
  const BigFloat n = floor(inv);
  if (n.is_zero()) return BigFloat(0L, prec);
  const BigFloat n1 = n + BigFloat(1L, wp);
  return with_prec(n * log(t) + lgamma(n1) + n, prec);
}

BigComplex z_mellin(const BigComplex& s, mpfr_prec_t prec) {
  require(s.re.sign() > 0, "Z(s) requires Re s > 0");
  const mpfr_prec_t wp = prec + 16;
  const BigComplex sw = with_prec(s, wp);
  BigComplex z = zeta(sw, wp);
  return with_prec((sw - one(wp)) * z / (sw * sw), prec);
}

BigComplex u_multiplier(const BigComplex& w, mpfr_prec_t prec) {
  if (equals_one(w)) throw Error(ErrorKind::PoleHit, "U has a pole at w = 1");
  const mpfr_prec_t wp = prec + 16;
  const BigComplex ww = with_prec(w, wp);
  const BigComplex ratio = ww / (one(wp) - ww);
  return with_prec(ratio * gamma_plus(ww, wp), prec);
}

BigComplex v_multiplier(const BigComplex& w, mpfr_prec_t prec) {
  if (equals_one(w)) throw Error(ErrorKind::PoleHit, "V has a pole at w = 1");
  const mpfr_prec_t wp = prec + 16;
  const BigComplex ww = with_prec(w, wp);
  const BigComplex ratio = ww / (one(wp) - ww);
  return with_prec(ratio * ratio * ratio * gamma_plus(ww, wp), prec);
}

BigComplex dk_dw(const AnalyticFunction& f, const BigComplex& w, int k, mpfr_prec_t prec,
                 ContourOptions opt) {
  require(k >= 0, "derivative order must be nonnegative");
  require(opt.radius > 0, "contour radius must be positive");
  require(opt.nodes >= 4, "contour needs at least 4 nodes");
  const mpfr_prec_t gp = prec + 20 + 4 * static_cast<mpfr_prec_t>(k);
  const BigComplex center = with_prec(w, gp);
  const BigFloat r(opt.radius, gp);
  const BigFloat two_pi = const_pi(gp) * 2L;

  BigFloat factorial(1L, gp);
  for (int i = 2; i <= k; ++i) factorial *= i;
  const BigFloat scale = factorial / pow(r, static_cast<long>(k));

  // Raw sum over nodes; doubling M reuses the previous nodes as the even ones.
  auto add_nodes = [&](BigComplex& raw, long m, long start, long stride) {
    for (long j = start; j < m; j += stride) {
      const BigFloat theta = two_pi * BigFloat(j, gp) / BigFloat(m, gp);
      const BigComplex z = center + from_polar(r, theta);
      raw += f(z, gp) * from_polar(BigFloat(1L, gp), -(theta * static_cast<long>(k)));
    }
  };

  long m = opt.nodes;
  BigComplex raw(gp);
  add_nodes(raw, m, 0, 1);
  BigComplex est = raw * scale / BigFloat(m, gp);
  const BigFloat tol = pow(BigFloat(2L, gp), -static_cast<long>(prec));
  for (int attempt = 0; attempt < 2; ++attempt) {
    m *= 2;
    add_nodes(raw, m, 1, 2);
    BigComplex next = raw * scale / BigFloat(m, gp);
    BigFloat bound = abs(next);
    if (bound < BigFloat(1L, gp)) bound = BigFloat(1L, gp);
    const bool ok = abs(next - est) < tol * bound;
    est = std::move(next);
    if (ok) return with_prec(est, prec);
  }
  throw Error(ErrorKind::NotConverged, "contour derivative unstable under node doubling");
}

std::size_t phi_series_terms(double t, mpfr_prec_t prec) {
  require(t > 0, "phi requires t > 0");
  const double x = 2 * kPi * t;
  const double target = -(static_cast<double>(prec) + 8) * kLn2;
  for (std::size_t j = 1;; ++j) {
    const double jj = static_cast<double>(j + 1);
    const double log_next = 2 * jj * std::log(x) - std::lgamma(2 * jj + 2) + std::log(4.0);
    const double ratio = x * x / ((2 * jj + 2) * (2 * jj + 3));
    if (ratio <= 0.5 && log_next < target) return j;
  }
}

namespace {

BigComplex u_times_power(const BigComplex& w, const BigFloat& log_t, mpfr_prec_t prec) {
  return u_multiplier(w, prec) * exp(-(with_prec(w, prec) * log_t));
}

BigComplex leading_term(const BigComplex& w, int k, const BigFloat& t, mpfr_prec_t prec) {
  const BigFloat log_t = log(with_prec(t, prec + 32));
  if (k == 0) return u_times_power(w, log_t, prec);
  return dk_dw([&log_t](const BigComplex& z, mpfr_prec_t p) { return u_times_power(z, with_prec(log_t, p), p); },
               w, k, prec);
}

void check_strip(const BigComplex& w, int k) {
  require(k >= 0, "derivative order must be nonnegative");
  require(w.re.sign() > 0 && w.re < BigFloat(1L, w.prec()), "phi requires 0 < Re w < 1");
}

}  // namespace

BigComplex phi(const BigComplex& w, int k, const BigFloat& t, mpfr_prec_t prec, std::size_t J) {
  check_strip(w, k);
  const double td = t.to_double();
  require(td > 0 && td <= 4, "phi series path requires 0 < t <= 4");
  const std::size_t need = phi_series_terms(td, prec);
  if (J < need)
    throw Error(ErrorKind::SeriesBudgetExceeded,
                "series needs " + std::to_string(need) + " terms, budget is " + std::to_string(J),
                static_cast<long>(need));

  const mpfr_prec_t wp = prec + 16 + static_cast<mpfr_prec_t>(std::ceil(2 * kPi * td / kLn2));
  const BigComplex ww = with_prec(w, wp);
  const BigFloat tt = with_prec(t, wp);
  const BigFloat x = const_pi(wp) * 2L * tt;
  const BigFloat x2 = x * x;
  BigFloat a(1L, wp);  // (2 pi t)^{2j} / (2j+1)!
  BigComplex series(wp);
  for (std::size_t j = 1; j <= J; ++j) {
    const long jj = static_cast<long>(j);
    a *= x2;
    a /= (2 * jj) * (2 * jj + 1);
    BigComplex denom = ww;
    denom.re += BigFloat(2 * jj, wp);
    BigComplex term = pow(denom, -(k + 1L)) * (a * (2 * jj));
    if (j % 2 == 0) {
      series += term;
    } else {
      series -= term;
    }
  }
  BigFloat kf(2L, wp);
  for (int i = 2; i <= k; ++i) kf *= i;
  if (k % 2 == 1) kf = -kf;
  BigComplex result = series * kf + leading_term(ww, k, tt, wp);
  if (k == 0) result.re -= sin(x) / (x / 2L);
  return with_prec(result, prec);
}

BigComplex phi(const BigComplex& w, int k, const BigFloat& t, mpfr_prec_t prec) {
  const double td = t.to_double();
  require(td > 0 && td <= 4, "phi series path requires 0 < t <= 4");
  return phi(w, k, t, prec, phi_series_terms(td, prec));
}

BigComplex phi_quadrature(const BigComplex& w, int k, const BigFloat& t, mpfr_prec_t prec) {
  check_strip(w, k);
  require(t.sign() > 0, "phi requires t > 0");
  const mpfr_prec_t wp = prec + 16;
  const BigComplex ww = with_prec(w, wp);
  const BigFloat tt = with_prec(t, wp);
  const BigFloat omega = const_pi(wp) * 2L * tt;
  const BigComplex w_minus_2 = ww - BigComplex(BigFloat(2L, wp));
  auto integrand = [&](const BigFloat& u, const BigFloat& v) {
    BigFloat lu(wp);
    if (u < BigFloat(0.5, wp)) {
      lu = log(u);
    } else {
      BigFloat neg_v = -v;
      mpfr_log1p(lu.raw(), neg_v.raw(), MPFR_RNDN);
    }
    BigComplex poly = ww * pow(lu, static_cast<long>(k));
    if (k > 0) poly += BigComplex(pow(lu, static_cast<long>(k - 1)) * static_cast<long>(k));
    return poly * exp(w_minus_2 * lu) * sin(omega * u);
  };
  const BigFloat tol = pow(BigFloat(2L, wp), -static_cast<long>(prec));
  const BigComplex integral = tanh_sinh(integrand, wp, tol);
  const BigComplex result = leading_term(ww, k, tt, wp) - integral / (const_pi(wp) * tt);
  return with_prec(result, prec);
}

std::complex<double> gamma_plus_integral(std::complex<double> s, double cutoff) {
  require(s.real() > 0 && s.real() < 1, "integral representation needs 0 < Re s < 1");
  require(cutoff >= 2, "cutoff must be at least 2");
  using C = std::complex<double>;
  const double omega = 2 * kPi;

  // [0, 1]: termwise integration of the sine series.
  C head = 0;
  double a = omega;  // (2 pi)^{2j+1} / (2j+1)!
  for (int j = 0; j < 80; ++j) {
    const C term = a / (s + 2.0 * j);
    head += (j % 2 == 0) ? term : -term;
    if (a < 1e-20) break;
    a *= omega * omega / ((2.0 * j + 2) * (2.0 * j + 3));
  }

  // [1, C]: Gauss-Legendre on half-period panels.
  C body = 0;
  const long panels = static_cast<long>(std::ceil((cutoff - 1) * 2));
  const double h = (cutoff - 1) / panels;
  auto f = [&](long double u) {
    const double x = static_cast<double>(u);
    return std::exp((s - 2.0) * std::log(x)) * std::sin(omega * x);
  };
  for (long p = 0; p < panels; ++p) body += integrate_gauss<C>(f, 1 + p * h, 1 + (p + 1) * h, 8);

  // [C, infinity): J_a = -C^a e^{i w C}/(i w) - (a/(i w)) J_{a-1}, unrolled.
  auto tail = [&](double w) {
    const C iw(0, w);
    const C a0 = s - 2.0;
    C coef = 1, total = 0;
    for (int m = 0; m < 8; ++m) {
      total += coef * (-std::exp((a0 - static_cast<double>(m)) * std::log(cutoff)) / iw);
      coef *= -(a0 - static_cast<double>(m)) / iw;
    }
    return total * std::exp(C(0, w * cutoff));
  };
  const C far = (tail(omega) - tail(-omega)) / C(0, 2);

  return (1.0 - s) / kPi * (head + body + far);
}

std::complex<double> mellin_of_a(std::complex<double> s, long pieces) {
  require(s.real() > 0, "Mellin transform of A needs Re s > 0");
  require(pieces >= 2, "need at least two pieces");
  using C = std::complex<double>;
  C total = 0;
  for (long n = 1; n < pieces; ++n) {
    const double nd = static_cast<double>(n);
    const double kappa = std::lgamma(nd + 1) - nd * std::log(nd) + nd;
    if (n <= 1000) {
      // F(u) = -u^{-s} (log(n/u)/s - 1/s^2) is an antiderivative of log(n/u) u^{-s-1}.
      auto big_f = [&](double u) {
        return -std::exp(-s * std::log(u)) * (std::log(nd / u) / s - 1.0 / (s * s));
      };
      const C with_log = big_f(nd + 1) - big_f(nd);
      const C plain = (std::exp(-s * std::log(nd)) - std::exp(-s * std::log(nd + 1))) / s;
      total += nd * with_log + kappa * plain;
    } else {
      auto g = [&](long double u) {
        const double x = static_cast<double>(u);
        return (nd * std::log(nd / x) + kappa) * std::exp((-s - 1.0) * std::log(x));
      };
      total += integrate_gauss<C>(g, nd, nd + 1, 8);
    }
  }
  // t < 1/N: A(t) = log(2 pi / t)/2 - {1/t} + t B2({1/t})/2 + O(t^2); the
  // last term has mean zero and is dropped.
  const double nd = static_cast<double>(pieces);
  const double eps = 1 / nd;
  const C eps_s = std::exp(s * std::log(eps));
  const C log_part = 0.5 * std::log(2 * kPi) * eps_s / s + 0.5 * eps_s * (std::log(nd) / s + 1.0 / (s * s));
  const C frac_part = std::exp(-s * std::log(nd)) / (2.0 * s) - std::exp((-s - 1.0) * std::log(nd)) / 12.0;
  return total + log_part - frac_part;
}

}  // namespace nblab
