#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tnv/diagrams.hpp"
#include "tnv/polynomial.hpp"
#include "tnv/profile.hpp"

namespace tnv {

// Holomorphic curve restricted to polynomial components, exact rationals.
struct PolyCurve {
  std::vector<Polynomial> components;

  PolyCurve() = default;
  explicit PolyCurve(std::vector<Polynomial> comps) : components(std::move(comps)) {
    bool allZero = true;
    for (const auto& f : components) allZero = allZero && f.is_zero();
    if (components.empty() || allZero)
      throw input_error("PolyCurve: need at least one nonzero component");
  }

  int n() const { return static_cast<int>(components.size()) - 1; }

  int max_degree() const {
    int d = 0;
    for (const auto& f : components) d = std::max(d, f.degree());
    return d;
  }
};

// Rational normal curve (1, z, z^2, ..., z^n).
inline PolyCurve rational_normal_curve(int n) {
  std::vector<Polynomial> comps;
  comps.reserve(n + 1);
  for (int k = 0; k <= n; ++k) comps.push_back(Polynomial::monomial(k));
  return PolyCurve(std::move(comps));
}

using PlueckerMap = std::map<std::vector<int>, Polynomial>;

// Pluecker coordinates of the p-th associated curve: for each sigma the p x p
// determinant of derivative rows restricted to columns sigma.  Minors are
// expanded by a subset DP along the derivative rows.
inline PlueckerMap pluecker(const PolyCurve& curve, int p) {
  const int n = curve.n();
  if (p < 1 || p > n + 1) throw input_error("pluecker: need 1 <= p <= n+1");

  std::vector<std::vector<Polynomial>> rows(p);  // rows[j][i] = x_i^(j)
  rows[0] = curve.components;
  for (int j = 1; j < p; ++j) {
    rows[j].reserve(n + 1);
    for (int i = 0; i <= n; ++i) rows[j].push_back(rows[j - 1][i].derivative());
  }

  PlueckerMap out;
  for (const auto& sigma : all_tuples(n, p)) {
    // minor[mask] = determinant of the first popcount(mask) derivative rows on
    // the columns selected by mask (bit k = column sigma.entries[k]).
    std::vector<Polynomial> minor(size_t(1) << p);
    minor[0] = Polynomial::constant(1);
    for (unsigned mask = 1; mask < minor.size(); ++mask) {
      const int r = __builtin_popcount(mask) - 1;  // expand along the last row
      Polynomial det;
      int pos = 0;  // column position within the selected subset
      for (int k = 0; k < p; ++k) {
        if (!(mask & (1u << k))) continue;
        const Polynomial& entry = rows[r][sigma.entries[k]];
        if (!entry.is_zero()) {
          Polynomial term = minor[mask & ~(1u << k)] * entry;
          det = ((r + pos) % 2 == 0) ? det + term : det - term;
        }
        ++pos;
      }
      minor[mask] = det;
    }
    out.emplace(sigma.entries, minor.back());
  }
  return out;
}

// Vanishing orders delta_0 < delta_1 < ... at a basepoint, with the derived
// stationary indices v_i = delta_i - delta_{i-1}.
struct StationaryProfile {
  std::vector<long long> delta;
  Rational basepoint = 0;

  StationaryProfile() = default;
  explicit StationaryProfile(std::vector<long long> d, Rational z0 = 0)
      : delta(std::move(d)), basepoint(std::move(z0)) {
    for (size_t k = 1; k < delta.size(); ++k)
      if (delta[k] <= delta[k - 1])
        throw input_error("StationaryProfile: delta must be strictly increasing");
  }

  int n() const { return static_cast<int>(delta.size()) - 1; }

  std::vector<long long> v() const {
    std::vector<long long> out;
    for (size_t k = 1; k < delta.size(); ++k) out.push_back(delta[k] - delta[k - 1]);
    return out;
  }
};

struct NormalForm {
  StationaryProfile profile;
  std::vector<Polynomial> components;  // in u = z - z0; component i has order delta_i
};

// Row echelon reduction of the Taylor coefficient matrix at z0.  Pivot columns
// give the delta sequence; the reduced rows are the normal-form components.
inline NormalForm normal_form(const PolyCurve& curve, const Rational& z0, int truncation = -1) {
  const int n = curve.n();
  const int fullWidth = curve.max_degree() + 1;
  int width = truncation > 0 ? truncation : curve.max_degree() + n + 2;

  for (;;) {
    const int cols = std::min(width, fullWidth);
    std::vector<std::vector<Rational>> m(n + 1);
    for (int i = 0; i <= n; ++i) {
      m[i] = curve.components[i].taylor_at(z0);
      m[i].resize(cols, Rational(0));
    }

    std::vector<long long> pivots;
    int row = 0;
    for (int col = 0; col < cols && row <= n; ++col) {
      int pivot = -1;
      for (int r = row; r <= n; ++r)
        if (m[r][col] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(m[row], m[pivot]);
      const Rational lead = m[row][col];
      for (int c = col; c < cols; ++c) m[row][c] /= lead;
      for (int r = 0; r <= n; ++r) {
        if (r == row || m[r][col] == 0) continue;
        const Rational factor = m[r][col];
        for (int c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
      }
      pivots.push_back(col);
      ++row;
    }

    if (row == n + 1) {
      NormalForm out;
      out.profile = StationaryProfile(pivots, z0);
      out.components.reserve(n + 1);
      for (int i = 0; i <= n; ++i) out.components.push_back(Polynomial(std::move(m[i])));
      return out;
    }
    if (cols >= fullWidth)
      throw input_error("normal_form: degenerate curve (rank " + std::to_string(row) +
                        " < " + std::to_string(n + 1) + ")");
    if (width >= (1 << 20))
      throw resource_error("normal_form: truncation cap reached");
    width *= 2;  // truncation insufficient, retry wider
  }
}

inline StationaryProfile stationary_indices(const PolyCurve& curve, const Rational& z0,
                                            int truncation = -1) {
  return normal_form(curve, z0, truncation).profile;
}

// d(i_0, ..., i_{p-1}) = delta_{i_0} + (delta_{i_1} - 1) + ... + (delta_{i_{p-1}} - p + 1).
inline long long d_of(const IndexTuple& sigma, const StationaryProfile& sp) {
  long long total = 0;
  for (int k = 0; k < sigma.size(); ++k) {
    const int idx = sigma.entries[k];
    if (idx < 0 || idx > sp.n()) throw input_error("d_of: tuple exceeds profile length");
    total += sp.delta[idx] - k;
  }
  return total;
}

// d_p = d(0, 1, ..., p-1); also exposed as the common vanishing order of the
// rank-p Pluecker coordinates.
inline long long d_p(const StationaryProfile& sp, int p) {
  if (p == 0) return 0;
  std::vector<int> id(p);
  for (int k = 0; k < p; ++k) id[k] = k;
  return d_of(IndexTuple(std::move(id)), sp);
}

// Second differences of p -> d_p; each equals v_p - 1, so the d-sequence is convex.
inline std::vector<long long> d_convexity(const StationaryProfile& sp) {
  const int n = sp.n();
  const auto v = sp.v();
  std::vector<long long> out;
  out.reserve(n);
  for (int p = 1; p <= n; ++p) {
    const long long second = d_p(sp, p - 1) - 2 * d_p(sp, p) + d_p(sp, p + 1);
    if (second != v[p - 1] - 1)
      throw std::logic_error("d_convexity: second difference != v_p - 1");
    out.push_back(second);
  }
  return out;
}

struct VStage {
  int index = 0;
  std::vector<IndexTuple> candidates;  // V(index)
  long long min_d = 0;
  long long bound = 0;  // min_d - sum of previous bounds
};

// Candidate sets V(i) and the stationary-index bounds.  At each stage all
// minimizers of earlier stages are removed; ties therefore weaken the bound
// to an inequality, matching the set difference as written.
inline std::vector<VStage> candidate_sets_V(int n, int p, const StationaryProfile& sp, int iMax) {
  const long long q = static_cast<long long>(p) * (n - p + 1);
  if (iMax < 1 || iMax > q) throw input_error("candidate_sets_V: iMax out of range");
  if (sp.n() != n) throw input_error("candidate_sets_V: profile length mismatch");

  std::vector<VStage> stages;
  std::vector<long long> removedValues;  // min_d of stages < i
  long long boundSum = 0;

  for (int i = 0; i <= iMax; ++i) {
    VStage stage;
    stage.index = i;
    for (int s = 0; s <= i; ++s) {
      for (const auto& sigma : graded_level(n, p, s)) {
        const long long d = d_of(sigma, sp);
        bool removed = false;
        for (long long m : removedValues) removed = removed || (d == m);
        if (!removed) stage.candidates.push_back(sigma);
      }
    }
    if (stage.candidates.empty())
      throw std::logic_error("candidate_sets_V: empty candidate set");
    stage.min_d = d_of(stage.candidates.front(), sp);
    for (const auto& sigma : stage.candidates)
      stage.min_d = std::min(stage.min_d, d_of(sigma, sp));
    stage.bound = stage.min_d - boundSum;
    boundSum += stage.bound;
    removedValues.push_back(stage.min_d);
    stages.push_back(std::move(stage));
  }
  return stages;
}

struct DAgreement {
  struct Entry {
    std::vector<int> sigma;
    long long expected = 0;            // d(sigma) from the delta sequence
    std::optional<int> actual;         // vanishing order of the Pluecker coordinate
    bool match = false;
  };
  std::vector<Entry> entries;
  bool all_match = true;
};

// End-to-end check of the vanishing-order formula: bring the curve to normal
// form, compute exact Pluecker coordinates, and compare every order with d.
inline DAgreement verify_d_against_pluecker(const PolyCurve& curve, int p, const Rational& z0) {
  const NormalForm nf = normal_form(curve, z0);
  const PolyCurve shifted((std::vector<Polynomial>(nf.components)));  // in u = z - z0
  const PlueckerMap coords = pluecker(shifted, p);

  DAgreement report;
  for (const auto& [sigma, poly] : coords) {
    DAgreement::Entry e;
    e.sigma = sigma;
    e.expected = d_of(IndexTuple(sigma), nf.profile);
    e.actual = vanishing_order(poly, 0);
    e.match = e.actual.has_value() && *e.actual == e.expected;
    report.all_match = report.all_match && e.match;
    report.entries.push_back(std::move(e));
  }
  return report;
}

// Degree of the p-th associated curve after removing the common polynomial
// factor of its Pluecker coordinates.
inline int associated_curve_degree(const PolyCurve& curve, int p) {
  const PlueckerMap coords = pluecker(curve, p);
  Polynomial g;
  int maxDeg = -1;
  for (const auto& [sigma, poly] : coords) {
    if (poly.is_zero()) continue;
    g = g.is_zero() ? poly : poly_gcd(g, poly);
    maxDeg = std::max(maxDeg, poly.degree());
  }
  if (maxDeg < 0) throw input_error("associated_curve_degree: all coordinates vanish");
  return maxDeg - g.degree();
}

}  // namespace tnv
