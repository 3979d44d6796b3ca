#pragma once

#include <string>

namespace hallar::numfmt {

// Shortest decimal string that parses back to exactly the same double.
// Exponents are written without a sign-plus or leading zeros (1e-6, not
// 1e-06), which is the form the solver logs and output files use.
std::string shortest(double x);

// Like shortest(), but integral values keep a trailing ".0" so the token
// stays a float literal (HSLR data files, settings echo).
std::string decimal(double x);

// printf-style scientific helpers for the iteration table.
std::string sci1(double x);  // 1-decimal mantissa, e.g. 2.9e-03
std::string sci3(double x);  // 3-decimal mantissa, e.g. 9.690e-06

}  // namespace hallar::numfmt
