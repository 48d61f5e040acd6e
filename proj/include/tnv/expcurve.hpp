#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tnv/diagrams.hpp"
#include "tnv/geometry.hpp"
#include "tnv/profile.hpp"

namespace tnv {

// Frequency data (a_i, b_i) of an exponential curve with w_i = a_i - sqrt(-1) b_i.
struct FrequencySet {
  std::vector<PointQ> pts;

  explicit FrequencySet(std::vector<PointQ> points) : pts(std::move(points)) {
    if (pts.empty()) throw input_error("FrequencySet: empty");
    std::set<PointQ> seen(pts.begin(), pts.end());
    if (seen.size() != pts.size())
      throw input_error("FrequencySet: frequencies must be mutually distinct");
  }

  int n() const { return static_cast<int>(pts.size()) - 1; }

  std::vector<PointD> doubles() const { return to_doubles(pts); }

  // CSV lines "a,b"; decimal or num/den rationals; '#' starts a comment line.
  static FrequencySet parse_csv(const std::string& text) {
    std::vector<PointQ> pts;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      size_t first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      const size_t comma = line.find(',');
      if (comma == std::string::npos)
        throw input_error("FrequencySet: expected 'a,b' line, got '" + line + "'");
      pts.push_back({parse_rational(line.substr(0, comma)),
                     parse_rational(line.substr(comma + 1))});
    }
    return FrequencySet(std::move(pts));
  }
};

// Fujimoto's curve e_0: frequencies 0, 1, ..., n on the real axis.
inline FrequencySet fujimoto_points(int n) {
  std::vector<PointQ> pts;
  for (int k = 0; k <= n; ++k) pts.push_back({Rational(k), Rational(0)});
  return FrequencySet(std::move(pts));
}

// V_p: all p-subset coordinate sums, deduplicated as a set.  p = 0 gives the
// origin, p = n+1 the single total sum.
inline std::vector<PointQ> vertex_set(const FrequencySet& fs, int p) {
  const int n = fs.n();
  if (p < 0 || p > n + 1) throw input_error("vertex_set: need 0 <= p <= n+1");
  std::set<PointQ> sums;
  for (const auto& sigma : all_tuples(n, p)) {
    PointQ s{Rational(0), Rational(0)};
    for (int e : sigma.entries) s = s + fs.pts[e];
    sums.insert(s);
  }
  return std::vector<PointQ>(sums.begin(), sums.end());
}

// V_i^(p): sums over i-element subsets of the point set V_p.  Enumeration is
// capped; the support sweep below covers the large cases.
inline std::vector<PointQ> vertex_set_i(const FrequencySet& fs, int p, int i,
                                        long long comboCap = 5000000) {
  const std::vector<PointQ> base = vertex_set(fs, p);
  const int m = static_cast<int>(base.size());
  if (i < 1 || i > m) throw input_error("vertex_set_i: i out of range");
  if (binomial(m, i) > comboCap)
    throw resource_error("vertex_set_i: C(" + std::to_string(m) + "," + std::to_string(i) +
                         ") exceeds the enumeration cap");
  std::set<PointQ> sums;
  std::vector<int> idx(i);
  for (int k = 0; k < i; ++k) idx[k] = k;
  while (true) {
    PointQ s{Rational(0), Rational(0)};
    for (int k : idx) s = s + base[k];
    sums.insert(s);
    int k = i - 1;
    while (k >= 0 && idx[k] == m - (i - k)) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < i; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::vector<PointQ>(sums.begin(), sums.end());
}

inline double l_perimeter(const FrequencySet& fs, int p) {
  return hull_perimeter(to_doubles(vertex_set(fs, p)));
}

// L_0 .. L_{n+1}; the two ends are single points, hence zero.
struct PerimeterSequence {
  std::vector<double> L;

  double second_difference(int k) const { return L[k - 1] - 2 * L[k] + L[k + 1]; }
};

inline PerimeterSequence perimeter_sequence(const FrequencySet& fs) {
  PerimeterSequence seq;
  for (int k = 0; k <= fs.n() + 1; ++k) seq.L.push_back(l_perimeter(fs, k));
  return seq;
}

// Support sweep over the cloud V_p: at every direction between consecutive
// critical angles the extreme point of V_i^(p) is the sum of the i points of
// V_p with the largest projections.  Walking the directions in order traces
// the hull boundary of V_i^(p) for every i at once.
inline std::vector<double> l_ip_perimeters_sweep(const FrequencySet& fs, int p, int iMax) {
  const std::vector<PointD> base = to_doubles(vertex_set(fs, p));
  const int m = static_cast<int>(base.size());
  if (iMax < 1 || iMax > m) throw input_error("l_ip_perimeters_sweep: iMax out of range");
  if (m == 1) return std::vector<double>(iMax, 0.0);

  std::vector<double> angles;
  angles.reserve(static_cast<size_t>(m) * (m - 1));
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      const double base_angle = std::atan2(base[k].y - base[j].y, base[k].x - base[j].x);
      for (double shift : {std::numbers::pi / 2, -std::numbers::pi / 2}) {
        double a = std::fmod(base_angle + shift, 2 * std::numbers::pi);
        if (a < 0) a += 2 * std::numbers::pi;
        angles.push_back(a);
      }
    }
  }
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());

  // Midpoint directions, one per arc (wrap-around arc included).
  std::vector<double> dirs;
  dirs.reserve(angles.size());
  for (size_t j = 0; j < angles.size(); ++j) {
    const double next = (j + 1 < angles.size()) ? angles[j + 1] : angles.front() + 2 * std::numbers::pi;
    dirs.push_back((angles[j] + next) / 2);
  }

  // prefix[d][i] = sum of the i points most extreme in direction dirs[d].
  std::vector<std::vector<PointD>> prefix(dirs.size());
  std::vector<int> order(m);
  std::vector<double> dot(m);
  for (size_t d = 0; d < dirs.size(); ++d) {
    const double ux = std::cos(dirs[d]);
    const double uy = std::sin(dirs[d]);
    for (int j = 0; j < m; ++j) dot[j] = base[j].x * ux + base[j].y * uy;
    for (int j = 0; j < m; ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (dot[a] != dot[b]) return dot[a] > dot[b];
      return base[a] < base[b];
    });
    prefix[d].resize(iMax + 1);
    prefix[d][0] = {0.0, 0.0};
    for (int i = 1; i <= iMax; ++i) prefix[d][i] = prefix[d][i - 1] + base[order[i - 1]];
  }

  std::vector<double> out(iMax);
  for (int i = 1; i <= iMax; ++i) {
    double per = 0.0;
    for (size_t d = 0; d < dirs.size(); ++d) {
      const PointD& a = prefix[d][i];
      const PointD& b = prefix[(d + 1) % dirs.size()][i];
      per += std::sqrt((b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y));
    }
    out[i - 1] = per;
  }
  return out;
}

inline double l_ip_perimeter(const FrequencySet& fs, int p, int i) {
  return l_ip_perimeters_sweep(fs, p, i).back();
}

struct MinkowskiReport {
  bool set_equal = false;
  double lhs_perimeter = 0;  // L_{p-1} + L_{p+1}
  double rhs_perimeter = 0;  // L_2^(p)
  bool perimeters_match = false;
};

// V_{p-1} + V_{p+1} = V_2^(p) with exact set equality, and the perimeter
// identity L_{p-1} + L_{p+1} = L_2^(p).
inline MinkowskiReport minkowski_identity_check(const FrequencySet& fs, int p,
                                                double tol = 1e-9) {
  const int n = fs.n();
  if (p < 1 || p > n) throw input_error("minkowski_identity_check: need 1 <= p <= n");

  const std::vector<PointQ> lo = vertex_set(fs, p - 1);
  const std::vector<PointQ> hi = vertex_set(fs, p + 1);
  const std::vector<PointQ> lhs = minkowski_sum(lo, hi);
  const std::vector<PointQ> rhs = vertex_set_i(fs, p, 2);

  MinkowskiReport r;
  r.set_equal = (lhs == rhs);
  r.lhs_perimeter = hull_perimeter(to_doubles(lo)) + hull_perimeter(to_doubles(hi));
  r.rhs_perimeter = hull_perimeter(to_doubles(rhs));
  r.perimeters_match = std::abs(r.lhs_perimeter - r.rhs_perimeter) <= tol;
  return r;
}

struct SymmetryReport {
  std::vector<double> L;
  double max_abs_diff = 0;
  bool pass = false;
};

// L_{n-p+1} = L_p for every p (reflection through the total sum).
inline SymmetryReport symmetry_check(const FrequencySet& fs, double tol = 1e-9) {
  SymmetryReport r;
  r.L = perimeter_sequence(fs).L;
  const int n = fs.n();
  for (int p = 0; p <= n + 1; ++p)
    r.max_abs_diff = std::max(r.max_abs_diff, std::abs(r.L[n - p + 1] - r.L[p]));
  r.pass = r.max_abs_diff <= tol;
  return r;
}

struct PeculiarReport {
  int p = 0;
  int i = 0;
  double L_p = 0;
  double middle = 0;
  double L_ip = 0;
  bool left_ok = false;   // L_p <= middle
  bool right_ok = false;  // middle <= L_i^(p)
  std::vector<std::vector<int>> argmax;  // maximizing sigma per level s = 1..i-1
};

// All reports for i = 1..iMax at once; the per-level maxima and the support
// sweep are shared across i.
inline std::vector<PeculiarReport> peculiar_sweep(const FrequencySet& fs, int p, int iMax,
                                                  double tol = 1e-9) {
  const int n = fs.n();
  if (p < 1 || p > n) throw input_error("peculiar_sweep: need 1 <= p <= n");
  const long long q = static_cast<long long>(p) * (n - p + 1);
  if (iMax < 1 || iMax > q) throw input_error("peculiar_sweep: i out of range 1..p(n-p+1)");

  const PerimeterSequence seq = perimeter_sequence(fs);
  std::vector<double> maxes(iMax);  // maxes[s-1], s = 1..iMax-1 used
  std::vector<std::vector<int>> argmax(iMax);
  for (int s = 1; s < iMax; ++s) {
    bool first = true;
    for (const auto& sigma : graded_level(n, p, s)) {
      double val = 0;
      for (auto& [k, cnt] : profile_balls(sigma, p, n).values)
        val += cnt * seq.second_difference(k);
      if (first || val > maxes[s - 1]) {
        maxes[s - 1] = val;
        argmax[s - 1] = sigma.entries;
        first = false;
      }
    }
  }

  const std::vector<double> lip = l_ip_perimeters_sweep(fs, p, iMax);

  std::vector<PeculiarReport> out;
  double partial = 0;
  for (int i = 1; i <= iMax; ++i) {
    if (i >= 2) partial += maxes[i - 2];
    PeculiarReport r;
    r.p = p;
    r.i = i;
    r.L_p = seq.L[p];
    r.middle = partial + i * seq.L[p];
    r.L_ip = lip[i - 1];
    r.left_ok = r.L_p <= r.middle + tol;
    r.right_ok = r.middle <= r.L_ip + tol;
    r.argmax.assign(argmax.begin(), argmax.begin() + (i - 1));
    out.push_back(std::move(r));
  }
  return out;
}

inline PeculiarReport peculiar_middle(const FrequencySet& fs, int p, int i, double tol = 1e-9) {
  return peculiar_sweep(fs, p, i, tol).back();
}

struct SharpnessReport {
  long long closed_form = 0;  // 2i(np - p^2 + p - i + 1)
  double middle = 0;
  double L_ip = 0;
  bool pass = false;
};

// Equality case of the generalized inequality at the curve e_0: middle and
// L_i^(p) both equal 2i(np - p^2 + p - i + 1); integer geometry, so the
// comparison is exact.
inline SharpnessReport fujimoto_sharpness(int n, int p, int i) {
  const FrequencySet fs = fujimoto_points(n);
  const PeculiarReport r = peculiar_middle(fs, p, i);
  SharpnessReport s;
  s.closed_form = 2LL * i * (static_cast<long long>(n) * p - static_cast<long long>(p) * p + p - i + 1);
  s.middle = r.middle;
  s.L_ip = r.L_ip;
  s.pass = (s.middle == static_cast<double>(s.closed_form)) &&
           (s.L_ip == static_cast<double>(s.closed_form));
  return s;
}

// Nevanlinna mean  m(r) = (1/4*pi) \oint log |E^(p)(r e^{i theta})|^2 dtheta
// via the closed form |E^(p)|^2 = sum_sigma |c_sigma|^2 exp(2 Re(w_sigma z)),
// trapezoidal quadrature with log-sum-exp stabilization.
inline double order_function_m(const FrequencySet& fs, int p, double r, int samples) {
  const int n = fs.n();
  if (p < 1 || p > n + 1) throw input_error("order_function_m: need 1 <= p <= n+1");
  if (samples < 256) throw input_error("order_function_m: need samples >= 256");

  const std::vector<PointD> w = fs.doubles();
  std::vector<PointD> freq;    // (a_sigma, b_sigma) per tuple
  std::vector<double> logc2;   // log |c_sigma|^2
  for (const auto& sigma : all_tuples(n, p)) {
    PointD s{0.0, 0.0};
    double lc = 0.0;
    for (int a = 0; a < p; ++a) {
      s = s + w[sigma.entries[a]];
      for (int b = 0; b < a; ++b) {
        // |w_{i_a} - w_{i_b}|^2 over w_i = a_i - sqrt(-1) b_i
        const double dx = w[sigma.entries[a]].x - w[sigma.entries[b]].x;
        const double dy = w[sigma.entries[a]].y - w[sigma.entries[b]].y;
        const double norm2 = dx * dx + dy * dy;
        if (norm2 == 0)
          throw input_error(
              "order_function_m: vanishing Pluecker coefficient; perturb the frequencies");
        lc += std::log(norm2);
      }
    }
    freq.push_back(s);
    logc2.push_back(lc);
  }

  double total = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double theta = 2 * std::numbers::pi * j / samples;
    const double ux = std::cos(theta);
    const double uy = std::sin(theta);
    double peak = -std::numeric_limits<double>::infinity();
    for (size_t t = 0; t < freq.size(); ++t)
      peak = std::max(peak, 2 * r * (freq[t].x * ux + freq[t].y * uy) + logc2[t]);
    double acc = 0.0;
    for (size_t t = 0; t < freq.size(); ++t)
      acc += std::exp(2 * r * (freq[t].x * ux + freq[t].y * uy) + logc2[t] - peak);
    total += peak + std::log(acc);
  }
  return total / (2.0 * samples);
}

struct SlopeReport {
  double slope = 0;
  double expected = 0;  // L_p / (2 pi)
  double rel_error = 0;
};

// The order function of E^(p) grows linearly with slope L_p / (2 pi); the
// difference quotient of m(r) between r1 and r2 approaches it.
inline SlopeReport numerical_order_slope(const FrequencySet& fs, int p, double r1, double r2,
                                         int samples) {
  if (!(r2 > r1 && r1 > 0)) throw input_error("numerical_order_slope: need r2 > r1 > 0");
  SlopeReport r;
  r.slope = (order_function_m(fs, p, r2, samples) - order_function_m(fs, p, r1, samples)) /
            (r2 - r1);
  r.expected = l_perimeter(fs, p) / (2 * std::numbers::pi);
  r.rel_error = std::abs(r.slope - r.expected) / std::max(std::abs(r.expected), 1e-9);
  return r;
}

}  // namespace tnv
