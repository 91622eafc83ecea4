#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace nblab {

/// Ascending positive ordinates of nontrivial zeta zeros 1/2 + i tau. The
/// decimal text of each ordinate is kept so that serialization round-trips.
struct ZeroTable {
  std::vector<double> ordinates;
  std::vector<std::string> decimals;
  std::string source;  // '#' comment lines, newline separated

  std::size_t count() const { return ordinates.size(); }
};

/// One decimal per line; blank lines and lines starting with '#' are
/// skipped. Throws MalformedLine or NotAscending with the 1-based line
/// number in Error::detail().
ZeroTable parse_zeros(std::istream& in);
ZeroTable parse_zeros_file(const std::string& path);
void serialize_zeros(const ZeroTable& table, std::ostream& out);

/// Multiplicity by table position; positions not listed count once.
using MultiplicityMap = std::map<std::size_t, int>;

/// sum over the table of m^2 * 2 / (1/4 + tau^2): each ordinate stands for
/// the conjugate pair rho, conj(rho).
double inv_modsq_sum(const ZeroTable& table, const MultiplicityMap& mults = {});

/// (log(T/2 pi) + 1) / (pi T), the integral of the zero density
/// log(tau/2 pi)/(2 pi) against 2/tau^2 beyond T. DomainError for T < 2 pi e,
/// where the density model is not decreasing.
double tail_bound(double t);

/// Allowance for the error of the main term of N(T) in the tail: with
/// |N(t) - (t/2 pi) log(t/2 pi e) - 7/8| <= 0.112 log t + 0.278 log log t + 2.51
/// (valid for t >= e), integrating 2/(1/4 + tau^2) against N by parts adds
/// at most this much to tail_bound(T).
double counting_error(double t);

/// 2 + gamma - log(4 pi) = sum over all zeros of 1/(rho (1 - rho)).
double classical_constant();

struct LowerBoundConstant {
  double partial_sum = 0;  // ordinates <= T_cut
  double tail = 0;         // tail_bound(T_cut)
  double tail_error = 0;   // counting_error(T_cut)
  double lower = 0;        // enclosure [partial_sum, partial_sum + tail + tail_error]
  double upper = 0;
  double value = 0;        // partial_sum + tail
  double sqrt_value = 0;
  double sqrt_lower = 0;
  double sqrt_upper = 0;
  bool contains_classical = false;
  std::string warning;     // set when the classical constant falls outside
};

/// Needs a table complete up to T_cut; the enclosure is rigorous then.
LowerBoundConstant lower_bound_constant(const ZeroTable& table, double t_cut, const MultiplicityMap& mults = {});

}  // namespace nblab
