#pragma once

#include <map>
#include <vector>

#include "tnv/diagrams.hpp"

namespace tnv {

// The map k -> n_lambda(k), anchored at p.  Only nonzero entries are stored;
// for a non-empty diagram the support is a contiguous interval.
struct ProfileVector {
  int anchor = 0;
  std::map<int, int> values;

  int at(int k) const {
    auto it = values.find(k);
    return it == values.end() ? 0 : it->second;
  }

  long long mass() const {
    long long m = 0;
    for (auto& [k, v] : values) m += v;
    return m;
  }

  friend bool operator==(const ProfileVector& a, const ProfileVector& b) {
    return a.anchor == b.anchor && a.values == b.values;
  }
};

// n_lambda(k) by the rotated-diagram definition.  The vertical line x = k
// crosses exactly the cells on diagonal k, and cell (r, c) of lambda
// (1-based) sits on diagonal k = p - r + c; no real coordinates are needed.
inline ProfileVector profile_geometric(const YoungDiagram& lambda, int p, int n) {
  if (!lambda.fits(p, n - p + 1))
    throw input_error("profile_geometric: diagram exceeds the p x (n-p+1) rectangle");
  ProfileVector prof;
  prof.anchor = p;
  for (int r = 1; r <= lambda.rows(); ++r)
    for (int c = 1; c <= lambda.part(r - 1); ++c) ++prof.values[p - r + c];
  return prof;
}

// b_sigma(k): for each 0 <= k <= p-1 drop one ball into boxes k+1 .. i_k and
// count balls per box.  Agreement with profile_geometric is the two-algorithm
// equivalence under test.
inline ProfileVector profile_balls(const IndexTuple& sigma, int p, int n) {
  if (sigma.size() != p) throw input_error("profile_balls: tuple has wrong length");
  if (!sigma.entries.empty() && sigma.entries.back() > n)
    throw input_error("profile_balls: tuple exceeds n");
  ProfileVector prof;
  prof.anchor = p;
  for (int k = 0; k < p; ++k)
    for (int box = k + 1; box <= sigma.entries[k]; ++box) ++prof.values[box];
  return prof;
}

// Stationary indices v_1..v_n of a curve at a point; v[k-1] holds v_k.
struct StationaryVector {
  std::vector<long long> v;

  StationaryVector() = default;
  explicit StationaryVector(std::vector<long long> vals) : v(std::move(vals)) {
    for (long long x : v)
      if (x < 0) throw input_error("StationaryVector: negative index");
  }

  int n() const { return static_cast<int>(v.size()); }
  long long at(int k) const {  // 1-based
    if (k < 1 || k > n()) throw input_error("StationaryVector: index out of range");
    return v[k - 1];
  }
};

// phi_p(lambda) = sum_k n_lambda(k) v_k.
inline long long phi(const YoungDiagram& lambda, int p, int n, const StationaryVector& v) {
  if (v.n() != n) throw input_error("phi: stationary vector has wrong length");
  const ProfileVector prof = profile_geometric(lambda, p, n);
  long long total = 0;
  for (auto& [k, cnt] : prof.values) total += cnt * v.at(k);
  return total;
}

}  // namespace tnv
