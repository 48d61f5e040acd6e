#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace tnv {

// Exact arithmetic used throughout: counts are arbitrary-precision integers,
// coordinates and sequence values are arbitrary-precision rationals.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class input_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class resource_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration cell caps (SYT enumeration, chain walks) honour TNV_MAX_CELLS.
inline int enumeration_cap(int fallback) {
  if (const char* s = std::getenv("TNV_MAX_CELLS")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && v > 0) return static_cast<int>(v);
  }
  return fallback;
}

inline BigInt factorial(int n) {
  if (n < 0) throw input_error("factorial: negative argument");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;  // always exact: r is a partial binomial
  }
  return r;
}

namespace detail {

// Decimal-only integer parse; avoids the octal reading of leading zeros in
// the cpp_int string constructor.
inline BigInt parse_decimal_int(const std::string& s, const std::string& context) {
  size_t k = 0;
  bool negative = false;
  if (k < s.size() && (s[k] == '+' || s[k] == '-')) negative = (s[k++] == '-');
  if (k >= s.size()) throw input_error("cannot parse rational: '" + context + "'");
  BigInt value = 0;
  for (; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9')
      throw input_error("cannot parse rational: '" + context + "'");
    value = value * 10 + (s[k] - '0');
  }
  return negative ? -value : value;
}

}  // namespace detail

// Accepts "3", "-7/4" and plain decimals like "1.25".
inline Rational parse_rational(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw input_error("cannot parse rational: '" + text + "'");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const BigInt num = detail::parse_decimal_int(s.substr(0, slash), text);
    const BigInt den = detail::parse_decimal_int(s.substr(slash + 1), text);
    if (den == 0) throw input_error("cannot parse rational: '" + text + "'");
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    const BigInt num = detail::parse_decimal_int(s.substr(0, dot) + s.substr(dot + 1), text);
    BigInt den = 1;
    for (size_t j = 0; j < s.size() - dot - 1; ++j) den *= 10;
    return Rational(num, den);
  }
  return Rational(detail::parse_decimal_int(s, text));
}

inline std::string rational_to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace tnv
