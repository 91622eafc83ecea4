#pragma once

#include <nblab/circle_model.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace nblab {

/// A polynomial read from the command line together with its factorization.
/// `roots` is filled only when every linear factor has a unit-circle root.
struct ParsedPolynomial {
  CirclePolynomial poly;
  std::vector<RootSpec> roots;
  int z_power = 0;  // number of bare z factors
  bool unit_roots = false;
};

/// Grammar (whitespace ignored):
///   product := factor { ['*'] factor }
///   factor  := '(' linear ')' ['^' int] | 'z' ['^' int] | '1' | linear
///   linear  := '1' ('+'|'-') [coef ['*']] 'z' ['/' int]
///   coef    := rational | [rational '*'] 'i' | '(' rational ('+'|'-') [rational '*'] 'i' ')'
/// so "(1-z)^2", "(1-z)(1+z)", "1-z/2", "(1-(3/5+4/5*i)*z)" and "z" are
/// accepted. A factor 1 - a z has the root alpha = conj(a) when |a| = 1.
ParsedPolynomial parse_polynomial(std::string_view text);

/// Comma-separated lists such as "64,128,256".
std::vector<long> parse_long_list(std::string_view text);
std::vector<double> parse_double_list(std::string_view text);

}  // namespace nblab
