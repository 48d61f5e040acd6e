#pragma once

#include <optional>
#include <vector>

#include "tnv/diagrams.hpp"
#include "tnv/profile.hpp"
#include "tnv/tableaux.hpp"

namespace tnv {

// Abstract sequence a_0..a_{n+1} with a_0 = a_{n+1} = 0, the slot both for the
// order functions T_k and for the algebraic degrees nu_k.
struct BoundarySequence {
  std::vector<Rational> a;

  explicit BoundarySequence(std::vector<Rational> values) : a(std::move(values)) {
    if (a.size() < 2) throw input_error("BoundarySequence: need length >= 2");
    if (a.front() != 0 || a.back() != 0)
      throw input_error("BoundarySequence: a_0 and a_{n+1} must be zero");
  }

  int n() const { return static_cast<int>(a.size()) - 2; }

  Rational second_difference(int k) const {  // a_{k-1} - 2a_k + a_{k+1}, 1 <= k <= n
    return a[k - 1] - 2 * a[k] + a[k + 1];
  }
};

namespace detail {

template <class Seq>
Rational profile_dot_second_diff(const ProfileVector& prof, const Seq& seq) {
  Rational total = 0;
  for (auto& [k, cnt] : prof.values)
    total += Rational(cnt) * (seq.a[k - 1] - 2 * seq.a[k] + seq.a[k + 1]);
  return total;
}

}  // namespace detail

// Literal evaluation of the balanced sum
//   sum_s sum_{sigma in level s} ( sum_k n_{lambda(sigma)}(k)(a_{k-1} - 2a_k + a_{k+1}) + a_p ),
// which the balanced sum formula asserts to be exactly zero.
inline Rational balanced_sum(const BoundarySequence& a, int p) {
  const int n = a.n();
  if (p < 1 || p > n) throw input_error("balanced_sum: need 1 <= p <= n");
  const long long q = static_cast<long long>(p) * (n - p + 1);
  Rational total = 0;
  for (int s = 0; s <= q; ++s) {
    for (const auto& sigma : graded_level(n, p, s)) {
      total += detail::profile_dot_second_diff(profile_balls(sigma, p, n), a);
      total += a.a[p];
    }
  }
  return total;
}

// alpha_k = sum over all sigma of n_{lambda(sigma)}(k), extracted by summing
// profiles; equals C(n,p) k below p and C(n,p-1)(n+1-k) above.
inline std::vector<BigInt> alpha_coefficients(int n, int p) {
  if (p < 1 || p > n) throw input_error("alpha_coefficients: need 1 <= p <= n");
  const long long q = static_cast<long long>(p) * (n - p + 1);
  std::vector<BigInt> alpha(n + 1, 0);  // alpha[k], k = 1..n
  for (int s = 0; s <= q; ++s)
    for (const auto& sigma : graded_level(n, p, s))
      for (auto& [k, cnt] : profile_balls(sigma, p, n).values) alpha[k] += cnt;
  return alpha;
}

// Residual of the coefficient identity
//   sum_{k<=p} C(n,p) k D2_k + sum_{k>p} C(n,p-1)(n+1-k) D2_k + C(n+1,p) a_p,
// zero for every boundary sequence.
inline Rational ak_identity_residual(const BoundarySequence& a, int p) {
  const int n = a.n();
  if (p < 1 || p > n) throw input_error("ak_identity_residual: need 1 <= p <= n");
  const BigInt cLow = binomial(n, p);
  const BigInt cHigh = binomial(n, p - 1);
  Rational total = 0;
  for (int k = 1; k <= n; ++k) {
    const BigInt coeff = (k <= p) ? cLow * k : cHigh * (n + 1 - k);
    total += Rational(coeff) * a.second_difference(k);
  }
  return total + Rational(binomial(n + 1, p)) * a.a[p];
}

// IEEE-double mode of the balanced sum, for reuse with float-valued sequences
// such as the perimeter sequence of an exponential curve (tolerance 1e-9
// instead of exact zero).
inline double balanced_sum_d(const std::vector<double>& a, int p) {
  const int n = static_cast<int>(a.size()) - 2;
  if (n < 1 || p < 1 || p > n) throw input_error("balanced_sum_d: need 1 <= p <= n");
  if (a.front() != 0.0 || a.back() != 0.0)
    throw input_error("balanced_sum_d: a_0 and a_{n+1} must be zero");
  const long long q = static_cast<long long>(p) * (n - p + 1);
  double total = 0;
  for (int s = 0; s <= q; ++s) {
    for (const auto& sigma : graded_level(n, p, s)) {
      for (auto& [k, cnt] : profile_balls(sigma, p, n).values)
        total += cnt * (a[k - 1] - 2 * a[k] + a[k + 1]);
      total += a[p];
    }
  }
  return total;
}

struct WeightedBalanced {
  Rational weighted;                   // f * f-hat weighted form
  std::optional<Rational> chain_form;  // chain-enumeration form, capped by area
};

// The weighted balanced sum in both of its evaluation orders: weights from
// hook-length counts, and independently from a brute-force chain walk.
inline WeightedBalanced weighted_balanced_sum(const BoundarySequence& a, int p,
                                              bool wantChainForm = true) {
  const int n = a.n();
  if (p < 1 || p > n) throw input_error("weighted_balanced_sum: need 1 <= p <= n");
  const long long q = static_cast<long long>(p) * (n - p + 1);

  WeightedBalanced out{Rational(0), std::nullopt};
  for (int s = 0; s <= q; ++s) {
    for (const auto& sigma : graded_level(n, p, s)) {
      const YoungDiagram lambda = maya_to_young(sigma, p, n);
      const BigInt w = f_hook(lambda) * f_hook(complement(lambda, p, n));
      Rational inner = detail::profile_dot_second_diff(profile_balls(sigma, p, n), a);
      out.weighted += Rational(w) * (inner + a.a[p]);
    }
  }

  if (wantChainForm) {
    try {
      Rational total = 0;
      for (const auto& [lambda, visits] : chain_visit_counts(p, n)) {
        Rational inner = detail::profile_dot_second_diff(profile_geometric(lambda, p, n), a);
        total += Rational(visits) * (inner + a.a[p]);
      }
      out.chain_form = total;
    } catch (const resource_error&) {
      out.chain_form.reset();
    }
  }
  return out;
}

// Residual of the free-top variant: abar_0 = 0, abar_{n+1} arbitrary (the
// N_{n+1} slot).  LHS - RHS with RHS = -C(n+1,p) abar_p + C(n,p-1) abar_{n+1}.
inline Rational second_diff_sum_residual(const std::vector<Rational>& abar, int p) {
  const int n = static_cast<int>(abar.size()) - 2;
  if (n < 1 || p < 1 || p > n) throw input_error("second_diff_sum_residual: bad sizes");
  if (abar.front() != 0) throw input_error("second_diff_sum_residual: abar_0 must be zero");
  const long long q = static_cast<long long>(p) * (n - p + 1);

  Rational lhs = 0;
  for (int s = 1; s <= q; ++s) {
    for (const auto& sigma : graded_level(n, p, s)) {
      for (auto& [k, cnt] : profile_balls(sigma, p, n).values)
        lhs += Rational(cnt) * (abar[k - 1] - 2 * abar[k] + abar[k + 1]);
    }
  }
  const Rational rhs =
      -Rational(binomial(n + 1, p)) * abar[p] + Rational(binomial(n, p - 1)) * abar[n + 1];
  return lhs - rhs;
}

struct BrillSegre {
  BigInt residual = 0;                // Brill-Segre LHS - RHS
  std::vector<BigInt> nu;             // nu_0..nu_{n+1} from the Pluecker recursion
  std::vector<BigInt> piene;          // piene[p-1] = closed-form nu_p, p = 1..n
  bool pieneMatches = false;
  bool nonNegative = false;           // negative nu_k flags inconsistent input
};

// Reconstructs nu_k from nu_{k-1} - 2nu_k + nu_{k+1} = 2g - 2 - sigma_k with
// nu_0 = 0, nu_1 = deg x, then checks the Brill-Segre identity and the
// closed-form degree of the p-th associated curve.  The reconstructed
// nu_{n+1} is the free N_{n+1} slot; it vanishes for a compact curve, where
// the identity reduces to the classical statement.
inline BrillSegre brill_segre_check(long long g, long long degx,
                                    const std::vector<long long>& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n)
    throw input_error("brill_segre_check: sigma must have length n");

  BrillSegre out;
  out.nu.assign(n + 2, 0);
  out.nu[1] = degx;
  for (int k = 1; k <= n; ++k)
    out.nu[k + 1] = 2 * out.nu[k] - out.nu[k - 1] + (2 * g - 2 - sigma[k - 1]);

  BigInt lhs = 0;
  for (int k = 1; k <= n; ++k) lhs += BigInt(n - k + 1) * sigma[k - 1];
  const BigInt rhs = BigInt(n) * (n + 1) * (g - 1) + BigInt(n + 1) * degx - out.nu[n + 1];
  out.residual = lhs - rhs;

  out.piene.reserve(n);
  out.pieneMatches = true;
  for (int p = 1; p <= n; ++p) {
    BigInt val = BigInt(p) * (BigInt(degx) + BigInt(p - 1) * (g - 1));
    for (int k = 1; k < p; ++k) val -= BigInt(p - k) * sigma[k - 1];
    out.pieneMatches = out.pieneMatches && (val == out.nu[p]);
    out.piene.push_back(std::move(val));
  }

  out.nonNegative = true;
  for (const auto& v : out.nu) out.nonNegative = out.nonNegative && v >= 0;
  return out;
}

}  // namespace tnv
