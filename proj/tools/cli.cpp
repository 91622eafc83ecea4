#include "cli.hpp"

#include <nblab/circle_model.hpp>
#include <nblab/error.hpp>
#include <nblab/fracpart.hpp>
#include <nblab/gram_asymptotics.hpp>
#include <nblab/poly_syntax.hpp>
#include <nblab/special.hpp>
#include <nblab/zero_table.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace nblab::cli {

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitCompute = 3;

bool is_validation(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::MalformedLine:
    case ErrorKind::NotAscending:
    case ErrorKind::NotUnitCircle:
    case ErrorKind::DomainError:
      return true;
    default:
      return false;
  }
}

int report(std::ostream& err, std::string_view kind, int code, const std::string& message) {
  std::string flat = message;
  const std::string prefix = std::string(kind) + ": ";
  if (flat.rfind(prefix, 0) == 0) flat.erase(0, prefix.size());
  std::replace(flat.begin(), flat.end(), '\n', ' ');
  err << "error kind=" << kind << " exit=" << code << " message=" << flat << '\n';
  return code;
}

struct Options {
  long precision = 128;
  std::string output;
  int digits = 15;

  // toy
  std::string q_text, p_text = "1", n_list;
  // special
  std::string function, tau_list = "0", t_list;
  double sigma = 0.5;
  int k = 0;
  double t = 1;
  // distance
  std::string lambda_list, grid = "geometric";
  std::size_t count = 0;
  double threshold = kDefaultSpectralCut;
  // gram, bound, zeros
  std::string zeros_path, inline_taus, mult_list, l_list;
  std::size_t take = 0;
  double l_value = 1000;
  bool constant = false;
  double t_cut = 0;
};

std::string fmt(double x, int digits) {
  if (x == 0) x = 0;  // no "-0" in CSV
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", std::clamp(digits, 1, 17), x);
  return buf;
}

std::string fmt(const BigFloat& x, int digits) {
  std::string s = x.to_string(digits);
  return s == "-0" ? "0" : s;
}

std::vector<ZeroSpec> load_zeros(const Options& o) {
  require(o.zeros_path.empty() != o.inline_taus.empty(), "give exactly one of --zeros and --tau-list");
  std::vector<double> taus;
  if (!o.zeros_path.empty())
    taus = parse_zeros_file(o.zeros_path).ordinates;
  else
    taus = parse_double_list(o.inline_taus);
  if (o.take > 0) {
    require(o.take <= taus.size(), "--take exceeds the number of zeros");
    taus.resize(o.take);
  }
  std::vector<long> mults(taus.size(), 1);
  if (!o.mult_list.empty()) {
    mults = parse_long_list(o.mult_list);
    require(mults.size() == taus.size(), "--mult needs one multiplicity per zero");
  }
  std::vector<ZeroSpec> zeros;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    require(mults[i] >= 1 && mults[i] <= 16, "multiplicities must lie in 1..16");
    zeros.push_back({taus[i], static_cast<int>(mults[i])});
  }
  return zeros;
}

void run_toy(const Options& o, std::ostream& out, std::ostream& err) {
  const ParsedPolynomial q = parse_polynomial(o.q_text);
  const ParsedPolynomial p = parse_polynomial(o.p_text);
  const std::vector<long> ns = parse_long_list(o.n_list);
  require(!ns.empty(), "--n-list is empty");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    require(ns[i] >= 0, "N must be nonnegative");
    if (i > 0) require(ns[i] > ns[i - 1], "--n-list must be strictly ascending");
  }
  require(!q.poly.is_zero(), "Q must be nonzero");
  const long qdeg = static_cast<long>(q.poly.degree());
  const bool spanning = q.unit_roots && q.z_power == 0 && static_cast<long>(p.poly.degree()) <= ns.front() + qdeg;

  out << "N,E,N_times_E\n";
  std::vector<std::pair<long, Rational>> scaled;
  for (long n : ns) {
    const Rational e = spanning ? prediction_error_spanning(p.poly, q.roots, n) : prediction_error(p.poly, q.poly, n).value;
    const Rational ne = Rational(n) * e;
    out << n << ',' << to_decimal(e, o.digits) << ',' << to_decimal(ne, o.digits) << '\n';
    scaled.emplace_back(n, ne);
  }
  if (scaled.size() >= 2 && scaled[scaled.size() - 2].first > 0) {
    const auto& a = scaled[scaled.size() - 2];
    const auto& b = scaled.back();
    err << "limit=" << to_decimal(richardson_first_order(a.first, a.second, b.first, b.second), o.digits) << '\n';
  }
}

void run_special(const Options& o, std::ostream& out) {
  const auto prec = static_cast<mpfr_prec_t>(o.precision);
  const std::string& fn = o.function;
  if (fn == "big-a") {
    require(!o.t_list.empty(), "big-a needs --t-list");
    const auto ts = parse_double_list(o.t_list);
    for (double t : ts) require(t > 0 && t <= 1, "t must lie in (0, 1]");
    out << "t,A\n";
    for (double t : ts) out << fmt(t, o.digits) << ',' << fmt(big_a(BigFloat(t, prec), prec), o.digits) << '\n';
    return;
  }
  const auto taus = parse_double_list(o.tau_list);
  using Eval = std::function<BigComplex(const BigComplex&)>;
  Eval eval;
  if (fn == "zeta")
    eval = [&](const BigComplex& s) { return zeta(s, prec); };
  else if (fn == "gamma-plus")
    eval = [&](const BigComplex& s) { return gamma_plus(s, prec); };
  else if (fn == "z-mellin")
    eval = [&](const BigComplex& s) { return z_mellin(s, prec); };
  else if (fn == "u")
    eval = [&](const BigComplex& s) { return u_multiplier(s, prec); };
  else if (fn == "v")
    eval = [&](const BigComplex& s) { return v_multiplier(s, prec); };
  else if (fn == "phi") {
    require(o.sigma > 0 && o.sigma < 1, "phi needs 0 < sigma < 1");
    require(o.t > 0 && o.t <= 4, "phi needs 0 < t <= 4");
    require(o.k >= 0 && o.k <= 8, "phi needs 0 <= k <= 8");
    eval = [&](const BigComplex& s) { return phi(s, o.k, BigFloat(o.t, prec), prec); };
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown function \"" + fn + "\"");
  }
  if (fn == "phi")
    out << "sigma,tau,k,t,re,im\n";
  else
    out << "sigma,tau,re,im\n";
  for (double tau : taus) {
    const BigComplex v = eval(BigComplex(o.sigma, tau, prec));
    out << fmt(o.sigma, o.digits) << ',' << fmt(tau, o.digits) << ',';
    if (fn == "phi") out << o.k << ',' << fmt(o.t, o.digits) << ',';
    out << fmt(v.re, o.digits) << ',' << fmt(v.im, o.digits) << '\n';
  }
}

void run_distance(const Options& o, std::ostream& out) {
  const auto lambdas = parse_double_list(o.lambda_list);
  require(!lambdas.empty(), "--lambda-list is empty");
  for (double l : lambdas) require(l > 0 && l < 1, "lambda must lie in (0, 1)");
  require(o.grid == "geometric" || o.grid == "arithmetic", "--grid must be geometric or arithmetic");
  require(o.threshold > 0 && o.threshold < 1, "--threshold must lie in (0, 1)");
  const GridPolicy policy = o.grid == "geometric" ? GridPolicy::Geometric : GridPolicy::Arithmetic;
  const auto rows = scaling_table(lambdas, policy, o.count, o.threshold);
  out << "lambda,d_hat,d_hat_sqrtlog\n";
  for (const auto& r : rows)
    out << fmt(r.lambda, o.digits) << ',' << fmt(r.d_hat, o.digits) << ',' << fmt(r.d_hat_sqrtlog, o.digits) << '\n';
}

void run_gram(const Options& o, std::ostream& out) {
  const auto zeros = load_zeros(o);
  require(o.l_value > 0, "--L must be positive");
  const auto prec = static_cast<mpfr_prec_t>(o.precision);
  const ModelGram g = model_gram(zeros, BigFloat(o.l_value, prec), prec);
  out << "i,j,re,im\n";
  for (std::size_t i = 0; i < g.index.size(); ++i)
    for (std::size_t j = 0; j < g.index.size(); ++j)
      out << i << ',' << j << ',' << fmt(g.entries(i, j).re, o.digits) << ',' << fmt(g.entries(i, j).im, o.digits)
          << '\n';
}

void run_bound(const Options& o, std::ostream& out, std::ostream& err) {
  const auto zeros = load_zeros(o);
  const auto ls = parse_double_list(o.l_list);
  require(!ls.empty(), "--L-list is empty");
  for (std::size_t i = 0; i < ls.size(); ++i) {
    require(ls[i] > 0, "L must be positive");
    if (i > 0) require(ls[i] > ls[i - 1], "--L-list must be strictly ascending");
  }
  const BoundReport r = bound_estimate(zeros, ls, static_cast<mpfr_prec_t>(o.precision));
  out << "L,P_times_L,target_sum,abs_err\n";
  for (const auto& row : r.rows)
    out << fmt(row.L, o.digits) << ',' << fmt(row.p_times_l, o.digits) << ',' << fmt(row.target, o.digits) << ','
        << fmt(row.abs_err, o.digits) << '\n';
  err << "limit=" << fmt(r.limit, o.digits) << " model=" << r.model_order << '\n';
}

void run_zeros(const Options& o, std::ostream& out, std::ostream& err) {
  require(!o.zeros_path.empty(), "zeros needs --file");
  const ZeroTable table = parse_zeros_file(o.zeros_path);
  if (!o.constant) {
    out << "index,ordinate\n";
    for (std::size_t i = 0; i < table.count(); ++i) out << i + 1 << ',' << table.decimals[i] << '\n';
    return;
  }
  require(table.count() > 0, "zero table is empty");
  const double t_cut = o.t_cut > 0 ? o.t_cut : table.ordinates.back();
  const LowerBoundConstant c = lower_bound_constant(table, t_cut);
  out << "value,lower,upper,sqrt_value,sqrt_lower,sqrt_upper,contains_classical\n";
  out << fmt(c.value, o.digits) << ',' << fmt(c.lower, o.digits) << ',' << fmt(c.upper, o.digits) << ','
      << fmt(c.sqrt_value, o.digits) << ',' << fmt(c.sqrt_lower, o.digits) << ',' << fmt(c.sqrt_upper, o.digits)
      << ',' << (c.contains_classical ? "true" : "false") << '\n';
  if (!c.warning.empty()) err << "warning: " << c.warning << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical experiments around the Nyman-Beurling distance", "nblab"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--precision-bits", o.precision, "working precision in bits (>= 64)")->capture_default_str();
  app.add_option("--output", o.output, "write the CSV here instead of standard output");
  app.add_option("--digits", o.digits, "significant digits in CSV output")->capture_default_str();

  auto* toy = app.add_subcommand("toy", "prediction error E(N, P) for a polynomial Q with unit-circle roots");
  toy->add_option("--q", o.q_text, "Q, e.g. \"(1-z)^2\"")->required();
  toy->add_option("--P", o.p_text, "P, default 1");
  toy->add_option("--n-list", o.n_list, "ascending N values, comma separated")->required();

  auto* special = app.add_subcommand("special", "special values on a vertical line");
  special->add_option("--fn", o.function, "zeta, gamma-plus, z-mellin, u, v, phi or big-a")->required();
  special->add_option("--sigma", o.sigma, "real part")->capture_default_str();
  special->add_option("--tau-list", o.tau_list, "imaginary parts, comma separated");
  special->add_option("--k", o.k, "derivative order for phi");
  special->add_option("--t", o.t, "t for phi");
  special->add_option("--t-list", o.t_list, "t values for big-a");

  auto* distance = app.add_subcommand("distance", "grid upper bounds for the distance D(lambda)");
  distance->add_option("--lambda-list", o.lambda_list, "lambda values in (0, 1)")->required();
  distance->add_option("--grid", o.grid, "geometric or arithmetic")->capture_default_str();
  distance->add_option("--count", o.count, "grid size, 0 for the default");
  distance->add_option("--threshold", o.threshold, "relative spectral truncation");

  auto add_zero_options = [&](CLI::App* sub) {
    sub->add_option("--zeros", o.zeros_path, "zero table file");
    sub->add_option("--tau-list", o.inline_taus, "inline ordinates, comma separated");
    sub->add_option("--take", o.take, "use only the first n zeros");
    sub->add_option("--mult", o.mult_list, "multiplicity per zero, comma separated");
  };
  auto* gram = app.add_subcommand("gram", "leading-order Gram matrix at one L");
  add_zero_options(gram);
  gram->add_option("--L", o.l_value, "log-scale length L")->capture_default_str();

  auto* bound = app.add_subcommand("bound", "squared projection P L against the zero sum");
  add_zero_options(bound);
  bound->add_option("--L-list", o.l_list, "ascending L values")->required();

  auto* zeros = app.add_subcommand("zeros", "zero table listing and lower-bound constant");
  zeros->add_option("--file", o.zeros_path, "zero table file")->required();
  zeros->add_flag("--constant", o.constant, "print the lower-bound constant");
  zeros->add_option("--t-cut", o.t_cut, "ordinate cut, default the last ordinate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return report(err, "InvalidArgument", kExitInvalid, e.what());
  }

  if (o.precision < 64) return report(err, "InvalidArgument", kExitInvalid, "--precision-bits must be at least 64");
  if (o.digits < 1 || o.digits > 200)
    return report(err, "InvalidArgument", kExitInvalid, "--digits must lie in 1..200");

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output, std::ios::binary);
    if (!file) return report(err, "InvalidArgument", kExitInvalid, "cannot open " + o.output);
  }

  std::ostringstream csv;
  try {
    if (toy->parsed())
      run_toy(o, csv, err);
    else if (special->parsed())
      run_special(o, csv);
    else if (distance->parsed())
      run_distance(o, csv);
    else if (gram->parsed())
      run_gram(o, csv);
    else if (bound->parsed())
      run_bound(o, csv, err);
    else
      run_zeros(o, csv, err);
  } catch (const Error& e) {
    return report(err, to_string(e.kind()), is_validation(e.kind()) ? kExitInvalid : kExitCompute, e.what());
  } catch (const std::exception& e) {
    return report(err, "Internal", kExitCompute, e.what());
  }

  if (o.output.empty()) {
    out << csv.str();
  } else {
    file << csv.str();
    if (!file) return report(err, "InvalidArgument", kExitInvalid, "cannot write " + o.output);
  }
  return 0;
}

}  // namespace nblab::cli
