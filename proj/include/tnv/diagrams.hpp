#pragma once

#include <algorithm>
#include <compare>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tnv/numbers.hpp"

namespace tnv {

// Strictly increasing tuple (i_0 < i_1 < ... < i_{p-1}) of non-negative
// integers, optionally bounded above by n.  Indices are 0-based throughout;
// the +1 offset of box numbers exists only in the Maya rendering.
struct IndexTuple {
  std::vector<int> entries;
  std::optional<int> bound;

  IndexTuple() = default;
  explicit IndexTuple(std::vector<int> e, std::optional<int> n = std::nullopt)
      : entries(std::move(e)), bound(n) {
    validate();
  }

  int size() const { return static_cast<int>(entries.size()); }

  // level(sigma) = sum(entries) - p(p-1)/2, the grading offset s.
  long long level() const {
    const long long p = size();
    long long sum = 0;
    for (int e : entries) sum += e;
    return sum - p * (p - 1) / 2;
  }

  bool contains(int j) const {
    return std::binary_search(entries.begin(), entries.end(), j);
  }

  void validate() const {
    for (size_t k = 0; k < entries.size(); ++k) {
      if (entries[k] < 0) throw input_error("IndexTuple: negative entry");
      if (k > 0 && entries[k] <= entries[k - 1])
        throw input_error("IndexTuple: entries must be strictly increasing");
    }
    if (bound && !entries.empty() && entries.back() > *bound)
      throw input_error("IndexTuple: entry exceeds bound n");
  }

  friend bool operator==(const IndexTuple& a, const IndexTuple& b) {
    return a.entries == b.entries;
  }
  friend std::strong_ordering operator<=>(const IndexTuple& a, const IndexTuple& b) {
    return a.entries <=> b.entries;
  }
};

// Row of n+1 boxes with p balls.  Box m corresponds to tuple entry m-1.
struct MayaDiagram {
  std::vector<bool> boxes;

  static MayaDiagram from_tuple(const IndexTuple& sigma, int n) {
    if (!sigma.entries.empty() && sigma.entries.back() > n)
      throw input_error("MayaDiagram: tuple entry exceeds n");
    MayaDiagram m;
    m.boxes.assign(n + 1, false);
    for (int e : sigma.entries) m.boxes[e] = true;
    return m;
  }

  IndexTuple to_tuple() const {
    std::vector<int> e;
    for (int j = 0; j < static_cast<int>(boxes.size()); ++j)
      if (boxes[j]) e.push_back(j);
    return IndexTuple(std::move(e), static_cast<int>(boxes.size()) - 1);
  }

  int ball_count() const {
    return static_cast<int>(std::count(boxes.begin(), boxes.end(), true));
  }

  std::string render() const {
    std::string s;
    s.reserve(boxes.size());
    for (bool b : boxes) s += b ? 'o' : '.';
    return s;
  }

  static MayaDiagram parse(const std::string& s) {
    MayaDiagram m;
    m.boxes.reserve(s.size());
    for (char c : s) {
      if (c == 'o') m.boxes.push_back(true);
      else if (c == '.') m.boxes.push_back(false);
      else throw input_error("MayaDiagram: expected '.' or 'o'");
    }
    return m;
  }
};

// Partition with weakly decreasing parts; trailing zeros are normalized away,
// rectangle bounds are supplied per operation.
struct YoungDiagram {
  std::vector<int> parts;

  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t k = 0; k < parts.size(); ++k) {
      if (parts[k] < 0) throw input_error("YoungDiagram: negative part");
      if (k > 0 && parts[k] > parts[k - 1])
        throw input_error("YoungDiagram: parts must be weakly decreasing");
    }
  }

  long long size() const {
    long long s = 0;
    for (int p : parts) s += p;
    return s;
  }

  int rows() const { return static_cast<int>(parts.size()); }
  int part(int r) const { return r < rows() ? parts[r] : 0; }
  bool empty() const { return parts.empty(); }

  bool fits(int maxRows, int maxCols) const {
    return rows() <= maxRows && (parts.empty() || parts[0] <= maxCols);
  }

  // Containment order of the Young lattice.
  bool contains(const YoungDiagram& other) const {
    if (other.rows() > rows()) return false;
    for (int r = 0; r < other.rows(); ++r)
      if (other.parts[r] > parts[r]) return false;
    return true;
  }

  friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
    return a.parts == b.parts;
  }
  friend std::strong_ordering operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
    return a.parts <=> b.parts;
  }
};

// lambda(sigma) = (i_{p-1} - p + 1, ..., i_1 - 1, i_0).
inline YoungDiagram maya_to_young(const IndexTuple& sigma, int p, int n) {
  if (sigma.size() != p) throw input_error("maya_to_young: tuple has wrong length");
  if (!sigma.entries.empty() && (sigma.entries.front() < 0 || sigma.entries.back() > n))
    throw input_error("maya_to_young: tuple out of range");
  std::vector<int> parts(p);
  for (int k = 0; k < p; ++k) parts[k] = sigma.entries[p - 1 - k] - (p - 1 - k);
  return YoungDiagram(std::move(parts));
}

// Inverse correspondence: i_k = lambda_{p-1-k} + k.
inline IndexTuple young_to_maya(const YoungDiagram& lambda, int p, int n) {
  if (!lambda.fits(p, n - p + 1))
    throw input_error("young_to_maya: diagram exceeds the p x (n-p+1) rectangle");
  std::vector<int> e(p);
  for (int k = 0; k < p; ++k) e[k] = lambda.part(p - 1 - k) + k;
  return IndexTuple(std::move(e), n);
}

// Complement in the p x (n-p+1) rectangle: hat(lambda)_i = (n-p+1) - lambda_{p-1-i}.
inline YoungDiagram complement(const YoungDiagram& lambda, int p, int n) {
  const int cols = n - p + 1;
  if (!lambda.fits(p, cols))
    throw input_error("complement: diagram exceeds the p x (n-p+1) rectangle");
  std::vector<int> parts(p);
  for (int i = 0; i < p; ++i) parts[i] = cols - lambda.part(p - 1 - i);
  return YoungDiagram(std::move(parts));
}

namespace detail {

inline void bounded_partitions_rec(int remaining, int maxPart, int partsLeft,
                                   std::vector<int>& cur,
                                   std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (partsLeft == 0) return;
  for (int part = std::min(remaining, maxPart); part >= 1; --part) {
    cur.push_back(part);
    bounded_partitions_rec(remaining - part, part, partsLeft - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// All partitions of s with at most maxParts parts, each at most maxPart.
inline std::vector<YoungDiagram> bounded_partitions(int s, int maxParts, int maxPart) {
  if (s < 0) throw input_error("bounded_partitions: negative target");
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  detail::bounded_partitions_rec(s, std::max(maxPart, 0), std::max(maxParts, 0), cur, raw);
  std::vector<YoungDiagram> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

// Unrestricted partition function p(s), bounded DP, memoized.
inline BigInt partition_number(int s) {
  if (s < 0) return 0;
  static std::vector<std::vector<BigInt>> table;  // table[m][k]: partitions of m into parts <= k
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  const size_t need = static_cast<size_t>(s) + 1;
  if (table.size() < need) {
    table.resize(need);
    for (size_t m = 0; m < need; ++m) {
      table[m].assign(need, 0);
      for (size_t k = 0; k < need; ++k) {
        if (m == 0) {
          table[m][k] = 1;
        } else if (k == 0) {
          table[m][k] = 0;
        } else {
          table[m][k] = table[m][k - 1];
          if (m >= k) table[m][k] += table[m - k][k];
        }
      }
    }
  }
  return table[s][s];
}

// binom([n+1], p)_(k_s): all sigma with level s, enumerated through bounded
// partitions rather than by filtering all C(n+1, p) subsets.
inline std::vector<IndexTuple> graded_level(int n, int p, int s, bool permissive = false) {
  if (p < 1 || p > n + 1) throw input_error("graded_level: need 1 <= p <= n+1");
  if (s < 0) throw input_error("graded_level: negative level");
  const long long q = static_cast<long long>(p) * (n - p + 1);
  if (s > q) {
    if (permissive) return {};
    throw input_error("graded_level: level out of range 0..p(n-p+1)");
  }
  std::vector<IndexTuple> out;
  for (const auto& lambda : bounded_partitions(s, p, n - p + 1))
    out.push_back(young_to_maya(lambda, p, n));
  std::sort(out.begin(), out.end());
  return out;
}

// Full set binom([n+1], p) in lexicographic order.
inline std::vector<IndexTuple> all_tuples(int n, int p) {
  if (p < 0 || p > n + 1) throw input_error("all_tuples: need 0 <= p <= n+1");
  std::vector<IndexTuple> out;
  std::vector<int> cur(p);
  for (int k = 0; k < p; ++k) cur[k] = k;
  if (p == 0) {
    out.emplace_back(std::vector<int>{}, n);
    return out;
  }
  while (true) {
    out.emplace_back(cur, n);
    int k = p - 1;
    while (k >= 0 && cur[k] == n - (p - 1 - k)) --k;
    if (k < 0) break;
    ++cur[k];
    for (int j = k + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

struct LevelCountBound {
  long long count = 0;
  BigInt partitionValue;
  bool equalityHolds = false;
};

// Partition bound  #level(s) <= p(s), equality iff s <= min(n-p+1, p).
inline LevelCountBound level_count_bound(int n, int p, int s) {
  if (s < 0) throw input_error("level_count_bound: negative level");
  LevelCountBound r;
  const long long q = static_cast<long long>(p) * (n - p + 1);
  r.count = (s > q) ? 0 : static_cast<long long>(graded_level(n, p, s, true).size());
  r.partitionValue = partition_number(s);
  r.equalityHolds = (BigInt(r.count) == r.partitionValue);
  const bool iff = (s <= std::min(n - p + 1, p));
  if (s >= 1 && r.equalityHolds != iff)
    throw std::logic_error("level_count_bound: equality condition violated");
  return r;
}

// Gauss sum  sum_{s=1}^{q} s * #level(s) = q/2 * C(n+1, p).
inline BigInt weighted_level_sum(int n, int p) {
  if (p < 1 || p > n) throw input_error("weighted_level_sum: need 1 <= p <= n");
  const long long q = static_cast<long long>(p) * (n - p + 1);
  BigInt total = 0;
  for (long long s = 1; s <= q; ++s)
    total += BigInt(s) * static_cast<long long>(graded_level(n, p, static_cast<int>(s)).size());
  BigInt expected = BigInt(q) * binomial(n + 1, p);
  if (expected % 2 != 0) throw std::logic_error("weighted_level_sum: q*C(n+1,p) is odd");
  expected /= 2;
  if (total != expected) throw std::logic_error("weighted_level_sum: Gauss sum identity violated");
  return total;
}

}  // namespace tnv
