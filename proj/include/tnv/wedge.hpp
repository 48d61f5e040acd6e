#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "tnv/diagrams.hpp"
#include "tnv/tableaux.hpp"

namespace tnv {

// Integer-coefficient formal sum of index tuples (unbounded entries allowed),
// representing iterated derivatives of the p-th associated curve.  Monomials
// are kept sorted with the permutation sign absorbed; repeated entries
// annihilate the term.
struct FormalWedge {
  std::map<std::vector<int>, BigInt> terms;

  void add(std::vector<int> tuple, const BigInt& coeff) {
    if (coeff == 0) return;
    int sign = 1;
    for (size_t a = 0; a + 1 < tuple.size(); ++a) {  // insertion sort, counting swaps
      for (size_t b = tuple.size() - 1; b > a; --b) {
        if (tuple[b] < tuple[b - 1]) {
          std::swap(tuple[b], tuple[b - 1]);
          sign = -sign;
        }
      }
    }
    for (size_t k = 0; k + 1 < tuple.size(); ++k)
      if (tuple[k] == tuple[k + 1]) return;  // x ^ x = 0
    auto [it, inserted] = terms.emplace(std::move(tuple), sign > 0 ? coeff : -coeff);
    if (!inserted) {
      it->second += sign > 0 ? coeff : -coeff;
      if (it->second == 0) terms.erase(it);
    }
  }

  friend bool operator==(const FormalWedge& a, const FormalWedge& b) {
    return a.terms == b.terms;
  }
};

inline FormalWedge wedge_identity(int p) {
  if (p < 1) throw input_error("wedge_identity: need p >= 1");
  std::vector<int> id(p);
  for (int k = 0; k < p; ++k) id[k] = k;
  FormalWedge w;
  w.add(std::move(id), 1);
  return w;
}

// One application of the Leibniz rule: shift any ball with an empty box to its
// right (interior gaps), plus the always-legal shift of the last entry.
inline FormalWedge derive_formal(const FormalWedge& w) {
  FormalWedge out;
  for (const auto& [tuple, coeff] : w.terms) {
    const int p = static_cast<int>(tuple.size());
    for (int k = 1; k < p; ++k) {
      if (tuple[k] - tuple[k - 1] >= 2) {
        std::vector<int> shifted = tuple;
        ++shifted[k - 1];
        out.add(std::move(shifted), coeff);
      }
    }
    std::vector<int> last = tuple;
    ++last[p - 1];
    out.add(std::move(last), coeff);
  }
  return out;
}

// Direct construction of the i-th derivative: the level-i sum with SYT-count
// coefficients, sum over partitions of i with at most p parts.
inline FormalWedge derivative_syt(int p, int i) {
  if (p < 1) throw input_error("derivative_syt: need p >= 1");
  if (i < 0) throw input_error("derivative_syt: need i >= 0");
  FormalWedge out;
  for (const auto& lambda : bounded_partitions(i, p, i)) {
    std::vector<int> tuple(p);
    for (int k = 0; k < p; ++k) tuple[k] = lambda.part(p - 1 - k) + k;
    out.add(std::move(tuple), f_hook(lambda));
  }
  return out;
}

}  // namespace tnv
