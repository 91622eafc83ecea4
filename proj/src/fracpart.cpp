#include <nblab/error.hpp>
#include <nblab/fracpart.hpp>
#include <nblab/quadrature.hpp>
#include <nblab/special.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>

namespace nblab {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// psi'(1 + u) on [0, 1] as a Chebyshev series, accurate to long double.
class TrigammaOnUnit {
 public:
  static constexpr int kDegree = 34;

  TrigammaOnUnit() {
    std::array<long double, kDegree> f{};
    for (int k = 0; k < kDegree; ++k) {
      const long double x = std::cos(kPiL * (k + 0.5L) / kDegree);
      f[k] = trigamma(1.5L + x / 2);
    }
    for (int j = 0; j < kDegree; ++j) {
      long double s = 0;
      for (int k = 0; k < kDegree; ++k) s += f[k] * std::cos(kPiL * j * (k + 0.5L) / kDegree);
      c_[j] = 2 * s / kDegree;
    }
    c_[0] /= 2;
  }

  long double operator()(long double u) const {
    const long double x = 2 * u - 1;
    long double b1 = 0, b2 = 0;
    for (int j = kDegree - 1; j >= 1; --j) {
      const long double b0 = 2 * x * b1 - b2 + c_[j];
      b2 = b1;
      b1 = b0;
    }
    return x * b1 - b2 + c_[0];
  }

 private:
  std::array<long double, kDegree> c_{};
};

const TrigammaOnUnit& trigamma_on_unit() {
  static const TrigammaOnUnit table;
  return table;
}

long to_long(const BigInt& z, const char* what) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::BudgetExceeded, std::string(what) + " is too large");
  return z.get_si();
}

long double to_long_double(const Rational& q) {
  return static_cast<long double>(to_long(q.get_num(), "numerator")) /
         static_cast<long double>(to_long(q.get_den(), "denominator"));
}

}  // namespace

long double trigamma(long double z) {
  require(z > 0, "trigamma needs z > 0");
  long double acc = 0;
  while (z < 16) {
    acc += 1 / (z * z);
    z += 1;
  }
  const long double w = 1 / (z * z);
  const long double series =
      1.0L / 6 -
      w * (1.0L / 30 - w * (1.0L / 42 - w * (1.0L / 30 - w * (5.0L / 66 - w * (691.0L / 2730 - w * 7.0L / 6)))));
  return acc + 1 / z + w / 2 + series * w / z;
}

long double fracpart_inner_periodic(const Rational& a_in, const Rational& b_in, std::size_t max_pieces) {
  require(sgn(a_in) > 0 && a_in <= 1 && sgn(b_in) > 0 && b_in <= 1, "dilations must lie in (0, 1]");
  const Rational& a = a_in <= b_in ? a_in : b_in;
  const Rational& b = a_in <= b_in ? b_in : a_in;
  const Rational r = a / b;
  const long p = to_long(r.get_num(), "period numerator");
  const long q = to_long(r.get_den(), "period");
  if (static_cast<double>(p) + static_cast<double>(q) > static_cast<double>(max_pieces))
    throw Error(ErrorKind::BudgetExceeded, "periodic route needs " + std::to_string(p + q) + " pieces");

  const long double rl = static_cast<long double>(p) / q;
  const long double pl = static_cast<long double>(p);
  const long double ql = static_cast<long double>(q);
  const GaussRule& g5 = gauss_legendre(5);
  const TrigammaOnUnit& w = trigamma_on_unit();
  // psi'(1 + y/q) has its nearest pole q away from the piece, so the rule
  // order follows len/q.
  const GaussRule& g3 = gauss_legendre(3);
  const GaussRule& g8 = gauss_legendre(8);
  const GaussRule& g30 = gauss_legendre(30);
  auto weight_rule = [&](long double len) -> const GaussRule& {
    if (len < 1e-3L * ql) return g3;
    if (len < 0.05L * ql) return g8;
    return g30;
  };

  // Breakpoints are Y/p with Y integral: n p for integers n, m q for y = m q/p.
  long n_next = 1, m_next = 1;  // next breakpoints of each kind
  long n_cur = 0, m_cur = 0;    // floor(y), floor(r y) on the current piece
  long y_num = 0;               // left end y0 = y_num / p
  long double fa = 0, fb = 0;   // {r y0}, {y0}, exact up to rounding
  long double part_a = 0, part_b = 0;
  while (n_cur < q) {
    const long cand_n = n_next * p;
    const long cand_m = m_next * q;
    const long next_num = std::min(cand_n, cand_m);
    const long double len = static_cast<long double>(next_num - y_num) / pl;
    const long double y0 = static_cast<long double>(y_num) / pl;
    auto h = [&](long double s) { return (fa + rl * s) * (fb + s); };

    if (y_num == 0) {
      part_a += rl * len;
    } else if (len < 0.05L * y0) {
      long double acc = 0;
      for (int i = 0; i < 5; ++i) {
        const long double s = len * (g5.nodes[i] + 1) / 2;
        const long double y = y0 + s;
        acc += g5.weights[i] * h(s) / (y * y);
      }
      part_a += acc * len / 2;
    } else {
      // h = r y^2 - (r n + m) y + m n on the piece.
      const long double nn = static_cast<long double>(n_cur), mm = static_cast<long double>(m_cur);
      const long double y1 = y0 + len;
      part_a += rl * len - (rl * nn + mm) * std::log1p(len / y0) + mm * nn * len / (y0 * y1);
    }
    const GaussRule& gw = weight_rule(len);
    long double acc = 0;
    for (std::size_t i = 0; i < gw.nodes.size(); ++i) {
      const long double s = len * (gw.nodes[i] + 1) / 2;
      acc += gw.weights[i] * h(s) * w((y0 + s) / ql);
    }
    part_b += acc * len / 2;

    const bool adv_n = cand_n == next_num;
    const bool adv_m = cand_m == next_num;
    if (adv_n) n_cur = n_next++;
    if (adv_m) m_cur = m_next++;
    y_num = next_num;
    // Fractional parts at the new left end from exact remainders.
    fa = adv_m ? 0.0L : static_cast<long double>((p * n_cur) % q) / ql;
    fb = adv_n ? 0.0L : static_cast<long double>((m_cur * q) % p) / pl;
  }
  return to_long_double(b) * (part_a + part_b / (ql * ql));
}

IntervalValue fracpart_inner(double a, double b, double delta, std::size_t max_pieces) {
  require(a > 0 && a <= 1 && b > 0 && b <= 1, "dilations must lie in (0, 1]");
  if (a > b) std::swap(a, b);
  if (delta <= 0) delta = a * 1e-7;
  require(delta < std::min(a, b) / 4, "head cut must be below min(a, b)/4");
  const long double x_end = 1.0L / delta;
  const long double al = a, bl = b;
  const double estimate = (a + b) / delta + 2;
  if (estimate > static_cast<double>(max_pieces))
    throw Error(ErrorKind::BudgetExceeded,
                "about " + std::to_string(static_cast<long long>(estimate)) + " breakpoint intervals needed");

  // In x = 1/t the integrand is {a x}{b x} / x^2; floors change at n/a and m/b.
  const GaussRule& g5 = gauss_legendre(5);
  long n_next = 1, m_next = 1, n_cur = 0, m_cur = 0;
  long double x0 = 0, sum = 0;
  std::size_t pieces = 0;
  while (x0 < x_end) {
    const long double xn = n_next / al, xm = m_next / bl;
    const long double tie = 8 * LDBL_EPSILON * std::max(xn, xm);
    const bool adv_n = xn <= xm + tie;
    const bool adv_m = xm <= xn + tie;
    const long double x1 = std::min(std::min(xn, xm), x_end);
    const long double len = x1 - x0;
    const long double nn = static_cast<long double>(n_cur), mm = static_cast<long double>(m_cur);
    if (n_cur == 0 && m_cur == 0) {
      sum += al * bl * len;
    } else if (len < 0.05L * x0) {
      long double acc = 0;
      for (int i = 0; i < 5; ++i) {
        const long double x = x0 + len * (g5.nodes[i] + 1) / 2;
        acc += g5.weights[i] * (al * x - nn) * (bl * x - mm) / (x * x);
      }
      sum += acc * len / 2;
    } else {
      sum += al * bl * len - (al * mm + bl * nn) * std::log1p(len / x0) + nn * mm * len / (x0 * x1);
    }
    ++pieces;
    if (adv_n) n_cur = n_next++;
    if (adv_m) m_cur = m_next++;
    x0 = x1;
  }
  // Head: int_0^delta {a/t}^2 dt <= delta/3 + 2 c delta^2 / a with
  // c = 2/(9 sqrt 3), the sup of the periodic antiderivative of {v}^2 - 1/3.
  const double c = 2.0 / (9.0 * std::sqrt(3.0));
  const double ha = delta / 3 + 2 * c * delta * delta / a;
  const double hb = delta / 3 + 2 * c * delta * delta / b;
  const double head = std::sqrt(ha * hb);
  const double slack = 16 * LDBL_EPSILON * (1 + a * b / delta + static_cast<double>(pieces));
  const double value = static_cast<double>(sum);
  return {value - slack, value + head + slack};
}

long double chi_cross(long double theta) {
  require(theta > 0 && theta <= 1, "theta must lie in (0, 1]");
  // K = int_0^1 y psi'(1 + y) dy, which equals 1 - gamma.
  static const long double k = [] {
    const GaussRule& g = gauss_legendre(40);
    long double acc = 0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      const long double y = (g.nodes[i] + 1) / 2;
      acc += g.weights[i] * y * trigamma(1 + y);
    }
    return acc / 2;
  }();
  return theta * (std::log(1 / theta) + k);
}

MellinCheck mellin_fracpart_check(std::complex<double> s, long pieces) {
  require(s.real() > 0 && s.real() < 1, "Mellin check needs 0 < Re s < 1");
  require(pieces >= 2, "need at least two pieces");
  using C = std::complex<double>;
  // t > 1: rho(1/t) = 1/t.
  C total = 1.0 / (1.0 - s);
  // x = 1/t in [n, n+1): int (x - n) x^{-s-1} dx.
  for (long n = 1; n < pieces; ++n) {
    const double a = static_cast<double>(n), b = a + 1;
    const C pa = std::exp(-s * std::log(a)), pb = std::exp(-s * std::log(b));
    total += (pb * b - pa * a) / (1.0 - s) - a * (pa - pb) / s;
  }
  // x >= N: {x} = 1/2 + B1({x}); the periodic part contributes -N^{-s-1}/12
  // up to a term bounded by |s+1||s+2| N^{-sigma-3} / (120 (sigma+2)) * 4.
  const double nd = static_cast<double>(pieces);
  const C ns = std::exp(-s * std::log(nd));
  total += ns / (2.0 * s) - ns / (12.0 * nd);
  MellinCheck out;
  out.integral = total;
  const BigComplex zs = zeta(BigComplex(s.real(), s.imag(), 96), 96);
  const std::complex<double> z(zs.re.to_double(), zs.im.to_double());
  out.expected = -z / s;
  out.remainder_bound =
      std::abs((s + 1.0) * (s + 2.0)) * std::pow(nd, -s.real() - 3) / (30.0 * (s.real() + 2));
  return out;
}

std::size_t DilationGrid::default_size(double lambda) {
  require(lambda > 0 && lambda <= 1, "lambda must lie in (0, 1]");
  return std::max<std::size_t>(50, static_cast<std::size_t>(std::ceil(20 * std::log(1 / lambda))));
}

DilationGrid::DilationGrid(double lambda, GridPolicy policy, std::vector<Rational> thetas)
    : lambda_(lambda), policy_(policy), thetas_(std::move(thetas)) {}

namespace {

// Snap points to k/D, keep k in [ceil(lambda D), D], drop duplicates.
std::vector<Rational> snap(const std::vector<double>& points, double lambda, long denominator) {
  // lambda is usually a decimal like 0.2 whose double sits just above it
  const long lo = static_cast<long>(std::ceil(lambda * static_cast<double>(denominator) * (1 - 1e-12)));
  std::vector<long> ks;
  for (double x : points) {
    long k = std::lround(x * static_cast<double>(denominator));
    k = std::clamp(k, lo, denominator);
    ks.push_back(k);
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  std::vector<Rational> out;
  for (long k : ks) out.push_back(make_rational(k, denominator));
  return out;
}

}  // namespace

DilationGrid DilationGrid::geometric(double lambda, std::size_t count) {
  require(lambda > 0 && lambda <= 1, "lambda must lie in (0, 1]");
  if (count == 0) count = default_size(lambda);
  require(count >= 1, "grid needs at least one point");
  if (lambda == 1 || count == 1) return DilationGrid(lambda, GridPolicy::Geometric, {Rational(1)});
  const double ratio = std::pow(1 / lambda, 1.0 / static_cast<double>(count - 1));
  const double k_min = std::ceil(4 / (ratio - 1));
  const long denominator = static_cast<long>(std::ceil(k_min / lambda));
  std::vector<double> pts;
  for (std::size_t i = 0; i < count; ++i)
    pts.push_back(std::pow(lambda, static_cast<double>(i) / static_cast<double>(count - 1)));
  return DilationGrid(lambda, GridPolicy::Geometric, snap(pts, lambda, denominator));
}

DilationGrid DilationGrid::arithmetic(double lambda, std::size_t count) {
  require(lambda > 0 && lambda <= 1, "lambda must lie in (0, 1]");
  if (count == 0) count = default_size(lambda);
  require(count >= 1, "grid needs at least one point");
  if (lambda == 1 || count == 1) return DilationGrid(lambda, GridPolicy::Arithmetic, {Rational(1)});
  const double step = (1 - lambda) / static_cast<double>(count - 1);
  const long denominator = static_cast<long>(std::ceil(4 / step));
  std::vector<double> pts;
  for (std::size_t i = 0; i < count; ++i) pts.push_back(lambda + step * static_cast<double>(i));
  return DilationGrid(lambda, GridPolicy::Arithmetic, snap(pts, lambda, denominator));
}

DilationGrid DilationGrid::explicit_points(double lambda, std::vector<Rational> thetas) {
  require(lambda > 0 && lambda <= 1, "lambda must lie in (0, 1]");
  require(!thetas.empty(), "grid needs at least one point");
  std::sort(thetas.begin(), thetas.end());
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    require(thetas[i].get_d() >= lambda * (1 - 1e-12) && thetas[i] <= 1, "every theta must lie in [lambda, 1]");
    if (i > 0) require(thetas[i] != thetas[i - 1], "thetas must be distinct");
  }
  return DilationGrid(lambda, GridPolicy::Explicit, std::move(thetas));
}

DistanceEstimate nb_distance(const DilationGrid& grid, double threshold) {
  require(grid.size() >= 1, "grid is empty");
  require(threshold > 0 && threshold < 1, "spectral threshold must lie in (0, 1)");
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  const auto n = static_cast<Eigen::Index>(grid.size());
  Mat g(n, n);
  Vec b(n);
  const auto& th = grid.thetas();
  for (Eigen::Index i = 0; i < n; ++i) {
    b(i) = chi_cross(to_long_double(th[i]));
    for (Eigen::Index j = i; j < n; ++j) {
      g(i, j) = fracpart_inner_periodic(th[i], th[j]);
      g(j, i) = g(i, j);
    }
  }
  Eigen::SelfAdjointEigenSolver<Mat> eig(g);
  if (eig.info() != Eigen::Success) throw Error(ErrorKind::IllConditioned, "eigen decomposition failed");
  const Vec& values = eig.eigenvalues();
  const long double top = values.maxCoeff();
  const long double cut = top * threshold;
  long double projected = 0;
  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (!(values(k) > cut)) continue;
    const long double c = eig.eigenvectors().col(k).dot(b);
    projected += c * c / values(k);
    ++rank;
  }
  if (rank == 0) throw Error(ErrorKind::IllConditioned, "no eigenvalue above the truncation threshold");
  DistanceEstimate est;
  est.lambda = grid.lambda();
  est.d_hat = static_cast<double>(std::sqrt(std::max(0.0L, 1 - projected)));
  est.grid_size = grid.size();
  est.rank = rank;
  est.threshold = threshold;
  return est;
}

std::vector<ScalingRow> scaling_table(const std::vector<double>& lambdas, GridPolicy policy, std::size_t count,
                                      double threshold) {
  require(policy != GridPolicy::Explicit, "scaling_table builds its own grids");
  for (double l : lambdas) require(l > 0 && l < 1, "lambda must lie in (0, 1)");
  std::vector<ScalingRow> rows;
  for (double l : lambdas) {
    const DilationGrid grid =
        policy == GridPolicy::Geometric ? DilationGrid::geometric(l, count) : DilationGrid::arithmetic(l, count);
    const DistanceEstimate est = nb_distance(grid, threshold);
    rows.push_back({l, est.d_hat, est.d_hat * std::sqrt(std::log(1 / l))});
  }
  return rows;
}

}  // namespace nblab
