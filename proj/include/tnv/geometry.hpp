#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "tnv/numbers.hpp"

namespace tnv {

template <class T>
struct Vec2 {
  T x{};
  T y{};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Vec2& a, const Vec2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

using PointD = Vec2<double>;
using PointQ = Vec2<Rational>;

inline PointD to_double(const PointQ& p) {
  return {static_cast<double>(p.x), static_cast<double>(p.y)};
}

inline std::vector<PointD> to_doubles(const std::vector<PointQ>& pts) {
  std::vector<PointD> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(to_double(p));
  return out;
}

template <class T>
T cross(const Vec2<T>& o, const Vec2<T>& a, const Vec2<T>& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Monotone chain, counterclockwise output, collinear points dropped.
// Degenerate hulls are preserved: one vertex for a point, two for a segment.
template <class T>
std::vector<Vec2<T>> convex_hull(std::vector<Vec2<T>> pts) {
  if (pts.empty()) throw input_error("convex_hull: empty point set");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const size_t m = pts.size();
  if (m <= 2) return pts;

  std::vector<Vec2<T>> hull(2 * m);
  size_t k = 0;
  for (size_t i = 0; i < m; ++i) {  // lower hull
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  const size_t lower = k + 1;
  for (size_t i = m - 1; i-- > 0;) {  // upper hull
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

// Euclidean boundary length of the closed vertex cycle.  A segment therefore
// counts twice its length and a single point counts zero, the convention
// consistent with the Cauchy formula and Minkowski additivity.
inline double perimeter(const std::vector<PointD>& hull) {
  if (hull.size() <= 1) return 0.0;
  double total = 0.0;
  for (size_t i = 0; i < hull.size(); ++i) {
    const PointD& a = hull[i];
    const PointD& b = hull[(i + 1) % hull.size()];
    total += std::sqrt((b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y));
  }
  return total;
}

inline double perimeter(const std::vector<PointQ>& hull) {
  std::vector<PointD> d = to_doubles(hull);
  return perimeter(d);
}

inline double hull_perimeter(const std::vector<PointD>& pts) {
  return perimeter(convex_hull(pts));
}

template <class T>
std::vector<Vec2<T>> minkowski_sum(const std::vector<Vec2<T>>& a, const std::vector<Vec2<T>>& b) {
  std::set<Vec2<T>> sums;
  for (const auto& u : a)
    for (const auto& v : b) sums.insert(u + v);
  return std::vector<Vec2<T>>(sums.begin(), sums.end());
}

}  // namespace tnv
