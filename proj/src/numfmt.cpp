#include "hallar/numfmt.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace hallar::numfmt {

namespace {

// "8.84e-06" -> "8.84e-6", "1e+05" -> "1e5"
std::string normalize_exponent(std::string s) {
  auto e = s.find('e');
  if (e == std::string::npos) return s;
  std::size_t k = e + 1;
  std::string exp_part;
  if (k < s.size() && (s[k] == '+' || s[k] == '-')) {
    if (s[k] == '-') exp_part.push_back('-');
    ++k;
  }
  while (k + 1 < s.size() && s[k] == '0') ++k;
  exp_part.append(s, k, std::string::npos);
  s.erase(e + 1);
  s += exp_part;
  return s;
}

}  // namespace

std::string shortest(double x) {
  if (std::isnan(x)) return "NaN";
  if (std::isinf(x)) return x > 0 ? "Inf" : "-Inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return normalize_exponent(std::string(buf, res.ptr));
}

std::string decimal(double x) {
  std::string s = shortest(x);
  if (s.find_first_of(".eIN") == std::string::npos) s += ".0";
  return s;
}

std::string sci1(double x) {
  if (std::isnan(x)) return "NaN";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1e", x);
  return buf;
}

std::string sci3(double x) {
  if (std::isnan(x)) return "NaN";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

}  // namespace hallar::numfmt
