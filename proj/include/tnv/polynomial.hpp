#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tnv/numbers.hpp"

namespace tnv {

// Dense univariate polynomial with exact rational coefficients, ascending
// powers, no trailing zeros.
struct Polynomial {
  std::vector<Rational> c;

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& v) { return Polynomial({v}); }
  static Polynomial monomial(int degree, const Rational& v = 1) {
    std::vector<Rational> coeffs(degree + 1, Rational(0));
    coeffs[degree] = v;
    return Polynomial(std::move(coeffs));
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero

  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Rational(0);
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c.size() <= 1) return Polynomial();
    std::vector<Rational> d(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<int>(k);
    return Polynomial(std::move(d));
  }

  // Coefficients of p(z0 + u) as a polynomial in u, by repeated synthetic
  // division by (z - z0).
  std::vector<Rational> taylor_at(const Rational& z0) const {
    if (c.empty()) return {};
    std::vector<Rational> work = c;
    std::vector<Rational> out;
    out.reserve(c.size());
    for (int m = static_cast<int>(work.size()) - 1; m >= 0; --m) {
      Rational carry = work[m];
      for (int k = m - 1; k >= 0; --k) {
        Rational tmp = work[k];
        work[k] = carry;  // quotient coefficient
        carry = tmp + z0 * carry;
      }
      out.push_back(carry);  // remainder = next Taylor coefficient
    }
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> s(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t k = 0; k < a.c.size(); ++k) s[k] += a.c[k];
    for (size_t k = 0; k < b.c.size(); ++k) s[k] += b.c[k];
    return Polynomial(std::move(s));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> s(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t k = 0; k < a.c.size(); ++k) s[k] += a.c[k];
    for (size_t k = 0; k < b.c.size(); ++k) s[k] -= b.c[k];
    return Polynomial(std::move(s));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> s(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) s[i + j] += a.c[i] * b.c[j];
    return Polynomial(std::move(s));
  }

  friend Polynomial operator*(const Polynomial& a, const Rational& v) {
    std::vector<Rational> s = a.c;
    for (auto& x : s) x *= v;
    return Polynomial(std::move(s));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c == b.c; }
};

// Smallest j with nonzero j-th Taylor coefficient at z0; nullopt for the zero
// polynomial (order +infinity).
inline std::optional<int> vanishing_order(const Polynomial& f, const Rational& z0) {
  if (f.is_zero()) return std::nullopt;
  const auto shifted = f.taylor_at(z0);
  for (size_t k = 0; k < shifted.size(); ++k)
    if (shifted[k] != 0) return static_cast<int>(k);
  return std::nullopt;  // unreachable for nonzero f
}

// Monic gcd via the Euclidean algorithm.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
  auto make_monic = [](Polynomial& f) {
    if (!f.is_zero() && f.c.back() != 1) {
      const Rational lead = f.c.back();
      for (auto& x : f.c) x /= lead;
    }
  };
  while (!b.is_zero()) {
    // a mod b
    Polynomial r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const Rational q = r.c.back() / b.c.back();
      const int shift = r.degree() - b.degree();
      std::vector<Rational> sub(shift + b.c.size(), Rational(0));
      for (size_t k = 0; k < b.c.size(); ++k) sub[shift + k] = b.c[k] * q;
      r = r - Polynomial(std::move(sub));
    }
    a = b;
    b = r;
  }
  make_monic(a);
  return a;
}

}  // namespace tnv
