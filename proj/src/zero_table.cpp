#include <nblab/error.hpp>
#include <nblab/zero_table.hpp>

#include <charconv>
#include <cmath>
#include <fstream>

namespace nblab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEuler = 0.57721566490153286061;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

ZeroTable parse_zeros(std::istream& in) {
  ZeroTable table;
  std::string line;
  long number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (text[0] == '#') {
      if (!table.source.empty()) table.source += '\n';
      table.source += trim(text.substr(1));
      continue;
    }
    double value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value) || value <= 0)
      throw Error(ErrorKind::MalformedLine, "line " + std::to_string(number) + ": '" + text + "'", number);
    if (!table.ordinates.empty() && value <= table.ordinates.back())
      throw Error(ErrorKind::NotAscending, "line " + std::to_string(number) + " does not ascend", number);
    table.ordinates.push_back(value);
    table.decimals.push_back(text);
  }
  return table;
}

ZeroTable parse_zeros_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open zero table '" + path + "'");
  return parse_zeros(in);
}

void serialize_zeros(const ZeroTable& table, std::ostream& out) {
  std::size_t start = 0;
  while (!table.source.empty() && start <= table.source.size()) {
    const auto stop = table.source.find('\n', start);
    out << "# " << table.source.substr(start, stop == std::string::npos ? std::string::npos : stop - start) << '\n';
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  for (const auto& d : table.decimals) out << d << '\n';
}

double inv_modsq_sum(const ZeroTable& table, const MultiplicityMap& mults) {
  require(table.count() > 0, "zero table is empty");
  for (const auto& [pos, m] : mults) {
    require(pos < table.count(), "multiplicity given for a position beyond the table");
    require(m >= 1, "multiplicity must be positive");
  }
  double total = 0;
  for (std::size_t i = 0; i < table.count(); ++i) {
    const auto it = mults.find(i);
    const double m = it == mults.end() ? 1.0 : it->second;
    const double tau = table.ordinates[i];
    total += m * m * 2 / (0.25 + tau * tau);
  }
  return total;
}

double tail_bound(double t) {
  if (!(t >= 2 * kPi * std::exp(1.0)))
    throw Error(ErrorKind::DomainError, "tail bound needs T >= 2 pi e, got " + std::to_string(t));
  return (std::log(t / (2 * kPi)) + 1) / (kPi * t);
}

double counting_error(double t) {
  if (!(t >= 2 * kPi * std::exp(1.0)))
    throw Error(ErrorKind::DomainError, "counting error needs T >= 2 pi e, got " + std::to_string(t));
  constexpr double a = 0.112, b = 0.278, c = 2.51;
  const double lt = std::log(t), llt = std::log(lt);
  const double e = a * lt + b * llt + c;
  // F(T) E(T) plus int_T^inf E |F'| with |F'| <= 4/tau^3 and
  // log log tau <= log log T + (log tau - log T)/log T.
  const double boundary = 2 / (0.25 + t * t) * e;
  const double integral = (a * (2 * lt + 1) + 2 * c + 2 * b * llt + b / lt) / (t * t);
  return boundary + integral;
}

double classical_constant() { return 2 + kEuler - std::log(4 * kPi); }

LowerBoundConstant lower_bound_constant(const ZeroTable& table, double t_cut, const MultiplicityMap& mults) {
  require(table.count() > 0, "zero table is empty");
  require(t_cut <= table.ordinates.back(), "T_cut must not exceed the last ordinate");
  LowerBoundConstant r;
  r.tail = tail_bound(t_cut);
  r.tail_error = counting_error(t_cut);
  ZeroTable head;
  for (std::size_t i = 0; i < table.count() && table.ordinates[i] <= t_cut; ++i) {
    head.ordinates.push_back(table.ordinates[i]);
    head.decimals.push_back(table.decimals[i]);
  }
  MultiplicityMap head_mults;
  for (const auto& [pos, m] : mults)
    if (pos < head.count()) head_mults[pos] = m;
  r.partial_sum = head.count() > 0 ? inv_modsq_sum(head, head_mults) : 0.0;
  r.lower = r.partial_sum;
  r.upper = r.partial_sum + r.tail + r.tail_error;
  r.value = r.partial_sum + r.tail;
  r.sqrt_value = std::sqrt(r.value);
  r.sqrt_lower = std::sqrt(r.lower);
  r.sqrt_upper = std::sqrt(r.upper);
  const double c = classical_constant();
  r.contains_classical = r.lower <= c && c <= r.upper;
  if (!r.contains_classical)
    r.warning = "classical constant " + std::to_string(c) + " lies outside the enclosure; check the table";
  return r;
}

}  // namespace nblab
