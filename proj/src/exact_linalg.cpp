#include <nblab/error.hpp>
#include <nblab/exact_linalg.hpp>

#include <mpfr.h>

#include <numeric>
#include <sstream>
#include <utility>

namespace nblab {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm();
  if (sgn(n) == 0) throw Error(ErrorKind::InvalidArgument, "division by zero Gaussian rational");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

GaussianRational pow(const GaussianRational& base, unsigned long exponent) {
  GaussianRational result(1);
  GaussianRational b = base;
  while (exponent > 0) {
    if (exponent & 1UL) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::string to_string(const GaussianRational& z) {
  std::ostringstream os;
  os << z;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  if (z.is_real()) return os << z.re;
  return os << z.re << (sgn(z.im) < 0 ? "-" : "+") << abs(z.im) << "i";
}

std::string to_decimal(const Rational& q, int digits) {
  mpfr_t x;
  mpfr_init2(x, static_cast<mpfr_prec_t>(digits * 4 + 64));
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, x);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clear(x);
  return out;
}

HermitianMatrix::HermitianMatrix(std::size_t n) : n_(n), a_(n * n) {
  require(n >= 1, "HermitianMatrix dimension must be at least 1");
}

HermitianMatrix::HermitianMatrix(std::size_t n, std::vector<GaussianRational> row_major)
    : n_(n), a_(std::move(row_major)) {
  require(n >= 1, "HermitianMatrix dimension must be at least 1");
  require(a_.size() == n * n, "HermitianMatrix entry count does not match dimension");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      require(a_[j * n + i] == a_[i * n + j].conj(), "matrix is not Hermitian");
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
  HermitianMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = GaussianRational(1);
  return m;
}

void HermitianMatrix::set(std::size_t i, std::size_t j, const GaussianRational& value) {
  require(i < n_ && j < n_, "HermitianMatrix index out of range");
  require(i != j || value.is_real(), "Hermitian diagonal entries must be real");
  a_[i * n_ + j] = value;
  a_[j * n_ + i] = value.conj();
}

std::vector<GaussianRational> HermitianMatrix::operator*(std::span<const GaussianRational> x) const {
  require(x.size() == n_, "vector length does not match matrix dimension");
  std::vector<GaussianRational> y(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) y[i] += a_[i * n_ + j] * x[j];
  return y;
}

std::vector<GaussianRational> multiply(const HermitianMatrix& a, const HermitianMatrix& b) {
  const std::size_t n = a.dimension();
  require(b.dimension() == n, "dimension mismatch in multiply");
  std::vector<GaussianRational> c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

// Element of Z[i].
struct GaussInt {
  BigInt re;
  BigInt im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

// a*b - c*d
GaussInt mul_sub(const GaussInt& a, const GaussInt& b, const GaussInt& c, const GaussInt& d) {
  GaussInt r;
  r.re = a.re * b.re - a.im * b.im - (c.re * d.re - c.im * d.im);
  r.im = a.re * b.im + a.im * b.re - (c.re * d.im + c.im * d.re);
  return r;
}

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// Exact quotient; the caller guarantees divisibility (Sylvester's identity).
void divexact_inplace(GaussInt& a, const GaussInt& d) {
  if (sgn(d.im) == 0) {
    mpz_divexact(a.re.get_mpz_t(), a.re.get_mpz_t(), d.re.get_mpz_t());
    mpz_divexact(a.im.get_mpz_t(), a.im.get_mpz_t(), d.re.get_mpz_t());
    return;
  }
  const BigInt n = d.re * d.re + d.im * d.im;
  BigInt re = a.re * d.re + a.im * d.im;
  BigInt im = a.im * d.re - a.re * d.im;
  mpz_divexact(a.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(a.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
}

GaussianRational to_rational(const GaussInt& z) { return {Rational(z.re), Rational(z.im)}; }

// Augmented system [G | b] scaled by the lcm of all denominators.
std::vector<std::vector<GaussInt>> integral_augmented(const HermitianMatrix& g,
                                                      std::span<const GaussianRational> b) {
  const std::size_t n = g.dimension();
  BigInt scale = 1;
  auto absorb = [&scale](const GaussianRational& z) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), z.re.get_den_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), z.im.get_den_mpz_t());
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) absorb(g(i, j));
    absorb(b[i]);
  }
  auto scaled = [&scale](const GaussianRational& z) {
    GaussInt r;
    r.re = z.re.get_num() * (scale / z.re.get_den());
    r.im = z.im.get_num() * (scale / z.im.get_den());
    return r;
  };
  std::vector<std::vector<GaussInt>> m(n, std::vector<GaussInt>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = scaled(g(i, j));
    m[i][n] = scaled(b[i]);
  }
  return m;
}

struct Elimination {
  std::vector<std::vector<GaussInt>> m;  // upper triangular after elimination
  std::vector<std::size_t> column_of;    // column_of[k] = original unknown at position k
  std::vector<GaussInt> pivots;
};

enum class PivotPolicy { Symmetric, None };

// Fraction-free (Bareiss) forward elimination. With PivotPolicy::None a
// zero pivot is reported by returning early with fewer pivots than rows.
Elimination bareiss(std::vector<std::vector<GaussInt>> m, PivotPolicy policy) {
  const std::size_t n = m.size();
  Elimination e;
  e.column_of.resize(n);
  std::iota(e.column_of.begin(), e.column_of.end(), std::size_t{0});
  GaussInt prev{1, 0};
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k].is_zero()) {
      if (policy == PivotPolicy::None) {
        e.m = std::move(m);
        return e;
      }
      std::size_t swap_with = n;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!m[j][j].is_zero()) {
          swap_with = j;
          break;
        }
      if (swap_with < n) {
        std::swap(m[k], m[swap_with]);
        for (auto& row : m) std::swap(row[k], row[swap_with]);
        std::swap(e.column_of[k], e.column_of[swap_with]);
      } else {
        // Every remaining diagonal entry vanishes; fall back to a row pivot.
        for (std::size_t i = k + 1; i < n; ++i)
          if (!m[i][k].is_zero()) {
            swap_with = i;
            break;
          }
        if (swap_with == n)
          throw Error(ErrorKind::SingularMatrix, "zero pivot at elimination step " + std::to_string(k));
        std::swap(m[k], m[swap_with]);
      }
    }
    const GaussInt& pivot = m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const GaussInt factor = m[i][k];
      for (std::size_t j = k + 1; j <= n; ++j) {
        if (factor.is_zero()) {
          m[i][j] = mul(pivot, m[i][j]);
        } else {
          m[i][j] = mul_sub(pivot, m[i][j], factor, m[k][j]);
        }
        divexact_inplace(m[i][j], prev);
      }
      m[i][k] = GaussInt{0, 0};
    }
    e.pivots.push_back(pivot);
    prev = pivot;
  }
  e.m = std::move(m);
  return e;
}

std::vector<GaussianRational> back_substitute(const Elimination& e) {
  const std::size_t n = e.m.size();
  std::vector<GaussianRational> y(n);
  for (std::size_t k = n; k-- > 0;) {
    GaussianRational acc = to_rational(e.m[k][n]);
    for (std::size_t j = k + 1; j < n; ++j) acc -= to_rational(e.m[k][j]) * y[j];
    y[k] = acc / to_rational(e.m[k][k]);
  }
  std::vector<GaussianRational> x(n);
  for (std::size_t k = 0; k < n; ++k) x[e.column_of[k]] = std::move(y[k]);
  return x;
}

}  // namespace

std::vector<GaussianRational> solve_hermitian(const HermitianMatrix& g,
                                              std::span<const GaussianRational> b) {
  require(b.size() == g.dimension(), "right-hand side length does not match matrix dimension");
  return back_substitute(bareiss(integral_augmented(g, b), PivotPolicy::Symmetric));
}

Rational projection_norm_sq(const HermitianMatrix& g, std::span<const GaussianRational> b) {
  require(b.size() == g.dimension(), "right-hand side length does not match matrix dimension");
  Elimination e = bareiss(integral_augmented(g, b), PivotPolicy::None);
  const std::size_t n = g.dimension();
  if (e.pivots.size() < n) {
    // A zero leading minor: distinguish a singular G (the pivoted
    // elimination throws SingularMatrix) from an indefinite one.
    bareiss(integral_augmented(g, b), PivotPolicy::Symmetric);
    throw Error(ErrorKind::NotPositiveDefinite,
                "zero leading minor at elimination step " + std::to_string(e.pivots.size()));
  }
  for (std::size_t k = 0; k < n; ++k) {
    const GaussInt& p = e.pivots[k];
    if (sgn(p.im) != 0 || sgn(p.re) < 0)
      throw Error(ErrorKind::NotPositiveDefinite,
                  "non-positive pivot at elimination step " + std::to_string(k));
  }
  const std::vector<GaussianRational> x = back_substitute(e);
  GaussianRational acc;
  for (std::size_t i = 0; i < n; ++i) acc += b[i].conj() * x[i];
  // b* G^{-1} b is real for Hermitian G; a nonzero imaginary part is a bug.
  if (!acc.is_real()) throw Error(ErrorKind::InvalidArgument, "projection norm is not real");
  return acc.re;
}

HermitianMatrix hilbert_matrix(std::size_t m) {
  require(m >= 1, "hilbert_matrix needs m >= 1");
  HermitianMatrix h(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) h.set(i, j, make_rational(1, static_cast<long>(i + j + 1)));
  return h;
}

HermitianMatrix hilbert_inverse(std::size_t m) {
  require(m >= 1, "hilbert_inverse needs m >= 1");
  auto binom = [](std::size_t n, std::size_t k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
  };
  HermitianMatrix inv(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const BigInt c = binom(i + j, i);
      BigInt v = BigInt(static_cast<unsigned long>(i + j + 1)) * binom(m + i, m - j - 1) *
                 binom(m + j, m - i - 1) * c * c;
      if ((i + j) % 2 == 1) v = -v;
      inv.set(i, j, Rational(v));
    }
  return inv;
}

}  // namespace nblab
