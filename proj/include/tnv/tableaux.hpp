#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "tnv/diagrams.hpp"

namespace tnv {

struct StandardTableau {
  YoungDiagram shape;
  std::vector<std::vector<int>> entries;  // entries[r][c], labels 1..|shape|

  int at(int r, int c) const { return entries[r][c]; }
};

// Hook length formula: f_lambda = |lambda|! / prod h(i,j).
inline BigInt f_hook(const YoungDiagram& lambda) {
  const int rows = lambda.rows();
  if (rows == 0) return 1;
  // Column heights once: col_height[c] = #{r : lambda_r > c}.
  std::vector<int> colHeight(lambda.parts[0], 0);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < lambda.parts[r]; ++c) ++colHeight[c];
  BigInt hooks = 1;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < lambda.parts[r]; ++c)
      hooks *= (lambda.parts[r] - c) + (colHeight[c] - r) - 1;
  BigInt num = factorial(static_cast<int>(lambda.size()));
  if (num % hooks != 0) throw std::logic_error("f_hook: hook product does not divide |lambda|!");
  return num / hooks;
}

// Corner-removal recurrence f_lambda = sum_k f_{lambda - 1_k}, memoized.
// The shared cache is also reused by chains_through via complement shapes.
inline BigInt f_recursive(const YoungDiagram& lambda) {
  static std::map<std::vector<int>, BigInt> cache;
  static std::mutex lock;

  std::function<BigInt(const std::vector<int>&)> go = [&](const std::vector<int>& parts) -> BigInt {
    if (parts.empty()) return 1;
    {
      std::lock_guard<std::mutex> guard(lock);
      if (auto it = cache.find(parts); it != cache.end()) return it->second;
    }
    BigInt total = 0;
    for (size_t k = 0; k < parts.size(); ++k) {
      if (parts[k] == 0) continue;
      const int below = (k + 1 < parts.size()) ? parts[k + 1] : 0;
      if (parts[k] - 1 < below) continue;  // not a removable corner
      std::vector<int> next = parts;
      --next[k];
      while (!next.empty() && next.back() == 0) next.pop_back();
      total += go(next);
    }
    std::lock_guard<std::mutex> guard(lock);
    return cache.emplace(parts, std::move(total)).first->second;
  };

  return go(lambda.parts);
}

// Visits every standard filling exactly once via row-frontier backtracking.
inline void for_each_syt(const YoungDiagram& shape,
                         const std::function<void(const StandardTableau&)>& visit,
                         int cellCap = -1) {
  const int cap = cellCap > 0 ? cellCap : enumeration_cap(14);
  const long long m = shape.size();
  if (m > cap)
    throw resource_error("for_each_syt: |lambda| exceeds enumeration cap " + std::to_string(cap));

  StandardTableau t;
  t.shape = shape;
  t.entries.resize(shape.rows());
  for (int r = 0; r < shape.rows(); ++r) t.entries[r].assign(shape.parts[r], 0);
  std::vector<int> filled(shape.rows(), 0);  // cells placed so far in each row

  std::function<void(int)> place = [&](int label) {
    if (label > m) {
      visit(t);
      return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
      if (filled[r] >= shape.parts[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;  // column would decrease
      t.entries[r][filled[r]] = static_cast<int>(label);
      ++filled[r];
      place(label + 1);
      --filled[r];
    }
  };
  place(1);
}

inline std::vector<StandardTableau> enumerate_syt(const YoungDiagram& shape, int cellCap = -1) {
  std::vector<StandardTableau> out;
  for_each_syt(shape, [&](const StandardTableau& t) { out.push_back(t); }, cellCap);
  return out;
}

// f_lambda * f_hat(lambda): the number of maximal chains through lambda in the
// Young lattice of the p x (n-p+1) rectangle.
inline BigInt chains_through(const YoungDiagram& lambda, int p, int n) {
  return f_hook(lambda) * f_hook(complement(lambda, p, n));
}

// Brute-force chain walk over the rectangle lattice; returns per-diagram visit
// counts.  Independent oracle for chains_through and the chain-form sums.
inline std::map<YoungDiagram, BigInt> chain_visit_counts(int p, int n, int areaCap = -1) {
  const int cap = areaCap > 0 ? areaCap : enumeration_cap(16);
  const int cols = n - p + 1;
  const long long area = static_cast<long long>(p) * cols;
  if (area > cap)
    throw resource_error("chain_visit_counts: rectangle area exceeds cap " + std::to_string(cap));

  std::map<YoungDiagram, BigInt> visits;
  std::vector<int> parts(p, 0);
  std::vector<YoungDiagram> path;

  std::function<void(long long)> walk = [&](long long placed) {
    std::vector<int> trimmed = parts;
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    path.emplace_back(std::move(trimmed));
    if (placed == area) {
      for (const auto& shape : path) ++visits[shape];  // one full chain completed
    } else {
      for (int r = 0; r < p; ++r) {
        const int limit = (r == 0) ? cols : parts[r - 1];
        if (parts[r] < limit) {
          ++parts[r];
          walk(placed + 1);
          --parts[r];
        }
      }
    }
    path.pop_back();
  };
  walk(0);
  return visits;
}

enum class EdgeSide { Empty, Ball };

// sum of f_{lambda(sigma)} f_{hat lambda(sigma)} over all sigma with j on the
// requested side (j absent from sigma for Empty, present for Ball).
inline BigInt edge_sum(int j, EdgeSide side, int p, int n) {
  if (j < 0 || j > n) throw input_error("edge_sum: j out of range 0..n");
  const long long q = static_cast<long long>(p) * (n - p + 1);
  BigInt total = 0;
  for (int s = 0; s <= q; ++s) {
    for (const auto& sigma : graded_level(n, p, s)) {
      const bool in = sigma.contains(j);
      if ((side == EdgeSide::Ball) != in) continue;
      const YoungDiagram lambda = maya_to_young(sigma, p, n);
      total += f_hook(lambda) * f_hook(complement(lambda, p, n));
    }
  }
  return total;
}

// Closed forms of the edge sums: hooks of the rectangle extended by one box.
inline BigInt edge_sum_closed_form(EdgeSide side, int p, int n) {
  const int cols = n - p + 1;
  std::vector<int> parts;
  if (side == EdgeSide::Empty) {
    parts.assign(p, cols);
    parts.push_back(1);  // [(n-p+1)^p, 1]
  } else {
    parts.assign(p, cols);
    parts[0] = cols + 1;  // [n-p+2, (n-p+1)^{p-1}]
  }
  return f_hook(YoungDiagram(std::move(parts)));
}

// Sum of tableau entries on diagonal k (cells with p - r + c = k, 1-based).
inline long long tableau_diagonal_sum(const StandardTableau& t, int k, int p) {
  long long sum = 0;
  for (int r = 1; r <= t.shape.rows(); ++r)
    for (int c = 1; c <= t.shape.parts[r - 1]; ++c)
      if (p - r + c == k) sum += t.at(r - 1, c - 1);
  return sum;
}

struct TableauProfileSum {
  BigInt closedForm;
  std::optional<BigInt> enumerated;
  bool verified = false;
};

// phi_{[(n-p+1)^p]}(k) = sum over SYT of the rectangle of n_T(k), with the
// piecewise-linear closed form.
inline TableauProfileSum tableau_profile_sum(int k, int p, int n) {
  if (k < 1 || k > n) throw input_error("tableau_profile_sum: k out of range 1..n");
  const int cols = n - p + 1;
  const long long q = static_cast<long long>(p) * cols;
  const BigInt f = f_hook(YoungDiagram(std::vector<int>(p, cols)));

  TableauProfileSum r;
  BigInt num = (k <= cols) ? BigInt(p) * (q + 1) * f * k
                           : BigInt(cols) * (q + 1) * f * (n + 1 - k);
  if (num % (n + 1) != 0)
    throw std::logic_error("tableau_profile_sum: closed form is not integral");
  r.closedForm = num / (n + 1);

  try {
    BigInt total = 0;
    for_each_syt(YoungDiagram(std::vector<int>(p, cols)), [&](const StandardTableau& t) {
      total += tableau_diagonal_sum(t, k, p);
    });
    r.enumerated = total;
    r.verified = (total == r.closedForm);
  } catch (const resource_error&) {
    r.enumerated.reset();
    r.verified = false;
  }
  return r;
}

}  // namespace tnv
