// Acceptance suite: one check per criterion, one PASS/FAIL line each.
// Exact checks compare with == on integers/rationals; geometric checks use
// the stated 1e-9 absolute tolerance; the slope check uses 2% relative error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "tnv/suites.hpp"

using namespace tnv;

namespace {

int failures = 0;

void criterion(int id, bool pass, double seconds, const std::string& detail) {
  std::printf("%s criterion %2d (%6.2f s): %s\n", pass ? "PASS" : "FAIL", id, seconds,
              detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

BoundarySequence draw_sequence(int n, std::mt19937_64& rng) {
  std::vector<Rational> a(n + 2, Rational(0));
  for (int k = 1; k <= n; ++k) {
    const long long den = (k % 3 == 0) ? 1 + draw(rng, 0, 3) : 1;
    a[k] = Rational(draw(rng, -100, 100), den);
  }
  return BoundarySequence(std::move(a));
}

FrequencySet draw_integer_points(int n, std::mt19937_64& rng, int span) {
  std::set<PointQ> seen;
  while (static_cast<int>(seen.size()) < n + 1)
    seen.insert({Rational(draw(rng, -span, span)), Rational(draw(rng, -span, span))});
  return FrequencySet(std::vector<PointQ>(seen.begin(), seen.end()));
}

// 1. Edge sums over binom([5],2): 21 on the empty-box side, 14 on the ball
//    side, with the extended-rectangle hook counts.
void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  for (int j : {0, 1, 2}) pass = pass && (edge_sum(j, EdgeSide::Empty, 2, 4) == 21);
  for (int j : {2, 3, 4}) pass = pass && (edge_sum(j, EdgeSide::Ball, 2, 4) == 14);
  pass = pass && (f_hook(YoungDiagram({3, 3, 1})) == 21);
  pass = pass && (f_hook(YoungDiagram({4, 3})) == 14);
  const double secs = seconds_since(start);
  criterion(1, pass && secs < 1.0, secs,
            "edge sums over binom([5],2) equal (21,21,21) / (14,14,14); f_[3,3,1]=21, f_[4,3]=14");
}

// 2. Tableau-profile sums of the 2 x 3 rectangle: (14, 28, 42, 21) via SYT
//    enumeration and via the closed form.
void criterion_2() {
  const auto start = std::chrono::steady_clock::now();
  const long long expected[] = {14, 28, 42, 21};
  bool pass = true;
  for (int k = 1; k <= 4; ++k) {
    const auto r = tableau_profile_sum(k, 2, 4);
    pass = pass && r.enumerated.has_value() && (*r.enumerated == expected[k - 1]) &&
           (r.closedForm == expected[k - 1]) && r.verified;
  }
  const double secs = seconds_since(start);
  criterion(2, pass && secs < 1.0, secs,
            "phi_[3^2](1..4) = (14, 28, 42, 21), enumeration and closed form");
}

// 3. Balanced and weighted balanced sums exactly zero for all p <= n <= 8,
//    200 seeded sequences per pair; coefficient identity matches.
void criterion_3() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240301);
  bool pass = true;
  for (int n = 1; n <= 8 && pass; ++n) {
    for (int p = 1; p <= n && pass; ++p) {
      const bool chainFeasible = static_cast<long long>(p) * (n - p + 1) <= 16;
      for (int trial = 0; trial < 200 && pass; ++trial) {
        const BoundarySequence a = draw_sequence(n, rng);
        pass = pass && (balanced_sum(a, p) == 0);
        pass = pass && (ak_identity_residual(a, p) == 0);
        const bool wantChain = chainFeasible && trial < 3;
        const auto w = weighted_balanced_sum(a, p, wantChain);
        pass = pass && (w.weighted == 0);
        if (wantChain) pass = pass && w.chain_form.has_value() && (*w.chain_form == 0);
      }
      const auto alpha = alpha_coefficients(n, p);
      for (int k = 1; k <= p; ++k) pass = pass && (alpha[k] == binomial(n, p) * k);
      for (int k = p; k <= n; ++k) pass = pass && (alpha[k] == binomial(n, p - 1) * (n + 1 - k));
    }
  }
  const double secs = seconds_since(start);
  criterion(3, pass && secs < 60.0, secs,
            "balanced + weighted balanced sums: residual exactly 0, 200 sequences per (n, p), "
            "n <= 8; alpha_k = C(n,p)k / C(n,p-1)(n+1-k)");
}

// 4. Profile equivalence n_lambda(sigma) = b_sigma, exhaustive for n <= 9.
void criterion_4() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  long long checked = 0;
  for (int n = 1; n <= 9 && pass; ++n)
    for (int p = 1; p <= n && pass; ++p)
      for (const auto& sigma : all_tuples(n, p)) {
        pass = pass &&
               (profile_geometric(maya_to_young(sigma, p, n), p, n) == profile_balls(sigma, p, n));
        ++checked;
      }
  const double secs = seconds_since(start);
  criterion(4, pass && secs < 30.0, secs,
            "profile equivalence exhaustive for n <= 9, all p (" + std::to_string(checked) +
                " tuples)");
}

// 5. Derivative formula vs iterated Leibniz differentiation, with the triple
//    agreement of tableau counts.
void criterion_5() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  for (int p = 1; p <= 4 && pass; ++p) {
    FormalWedge iterated = wedge_identity(p);
    for (int i = 0; i <= 8 && pass; ++i) {
      pass = pass && (derivative_syt(p, i) == iterated);
      iterated = derive_formal(iterated);
    }
  }
  for (int m = 0; m <= 12 && pass; ++m) {
    for (const auto& lambda : bounded_partitions(m, m, m)) {
      const BigInt viaHooks = f_hook(lambda);
      BigInt enumerated = 0;
      for_each_syt(lambda, [&](const StandardTableau&) { ++enumerated; });
      pass = pass && (viaHooks == f_recursive(lambda)) && (viaHooks == enumerated);
      if (!pass) break;
    }
  }
  const double secs = seconds_since(start);
  criterion(5, pass, secs,
            "derivative formula = iterated Leibniz (p <= 4, i <= 8); "
            "f_hook = f_recursive = enumeration for |lambda| <= 12");
}

// 6. The worked exponential-curve table at tolerance 1e-9.
void criterion_6() {
  const auto start = std::chrono::steady_clock::now();
  const FrequencySet fs = preset_points("paper-n5");
  const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0);
  const auto L = perimeter_sequence(fs).L;
  bool pass = true;
  pass = pass && std::abs(L[1] - (2 + 3 * s2)) <= 1e-9;
  pass = pass && std::abs(L[2] - (4 + s2 + 2 * s5)) <= 1e-9;
  pass = pass && std::abs(L[3] - (8 + 2 * s2)) <= 1e-9;
  pass = pass && std::abs(l_ip_perimeter(fs, 2, 2) - (10 + 5 * s2)) <= 1e-9;
  pass = pass && std::abs(l_ip_perimeter(fs, 2, 3) - (8 + 4 * s2 + 4 * s5)) <= 1e-9;
  pass = pass && std::abs(L[1] + L[3] - l_ip_perimeter(fs, 2, 2)) <= 1e-9;
  const double secs = seconds_since(start);
  criterion(6, pass, secs,
            "worked 6-point table: L_1, L_2, L_3, L_2^(2), L_3^(2) and L_1 + L_3 = L_2^(2)");
}

// 7. Exact Minkowski set identity on 100 seeded integer clouds, n <= 7.
void criterion_7() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240707);
  bool pass = true;
  int sets = 0;
  while (sets < 100 && pass) {
    const int n = 1 + static_cast<int>(draw(rng, 0, 6));
    const FrequencySet fs = draw_integer_points(n, rng, 19);
    for (int p = 1; p <= n && pass; ++p) {
      const auto r = minkowski_identity_check(fs, p);
      pass = pass && r.set_equal && r.perimeters_match;
    }
    ++sets;
  }
  const double secs = seconds_since(start);
  criterion(7, pass, secs,
            "V_{p-1} + V_{p+1} = V_2^(p) exact set equality, 100 seeded integer clouds, "
            "n <= 7, all p");
}

// 8. Generalized inequality on 500 seeded clouds plus the collinear equality
//    case for n <= 8.
void criterion_8() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240808);
  bool pass = true;
  for (int set = 0; set < 500 && pass; ++set) {
    const int n = 1 + static_cast<int>(draw(rng, 0, 5));
    const FrequencySet fs = draw_integer_points(n, rng, 12);
    for (int p = 1; p <= n && pass; ++p) {
      for (const auto& r : peculiar_sweep(fs, p, p * (n - p + 1))) {
        pass = pass && r.left_ok && r.right_ok;
        if (!pass) break;
      }
    }
  }
  bool sharp = true;
  for (int n = 1; n <= 8 && sharp; ++n)
    for (int p = 1; p <= n && sharp; ++p)
      for (int i = 1; i <= p * (n - p + 1) && sharp; ++i)
        sharp = fujimoto_sharpness(n, p, i).pass;
  const double secs = seconds_since(start);
  criterion(8, pass && sharp, secs,
            "L_p <= middle <= L_i^(p) on 500 seeded clouds (n <= 6, all p, i); collinear "
            "equality middle = L_i^(p) = 2i(np - p^2 + p - i + 1) exact for n <= 8");
}

// 9. Degree of the associated curves of the rational normal curve, and the
//    Brill-Segre residual on random inputs.
void criterion_9() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  for (int n = 1; n <= 6 && pass; ++n)
    for (int p = 1; p <= n && pass; ++p)
      pass = pass && (associated_curve_degree(rational_normal_curve(n), p) == p * (n - p + 1));
  std::mt19937_64 rng(20240909);
  for (int trial = 0; trial < 200 && pass; ++trial) {
    const int n = 1 + static_cast<int>(draw(rng, 0, 6));
    std::vector<long long> sigma(n);
    for (auto& s : sigma) s = draw(rng, 0, 5);
    const auto r = brill_segre_check(draw(rng, 0, 3), draw(rng, 1, 15), sigma, n);
    pass = pass && (r.residual == 0) && r.pieneMatches;
  }
  const double secs = seconds_since(start);
  criterion(9, pass, secs,
            "deg X^(p) = p(n-p+1) for the rational normal curve (n <= 6); Brill-Segre residual "
            "exactly 0 on random (g, deg, sigma)");
}

// 10. Order-function slope against L_p / (2 pi) at 2% relative error.
void criterion_10() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20241010);
  bool pass = true;
  int sets = 0;
  double worst = 0;
  while (sets < 10 && pass) {
    const int n = 1 + static_cast<int>(draw(rng, 0, 3));
    const FrequencySet fs = draw_integer_points(n, rng, 2);
    for (int p = 1; p <= n + 1 && pass; ++p) {
      const auto r = numerical_order_slope(fs, p, 50, 100, 4096);
      worst = std::max(worst, r.rel_error);
      pass = pass && (r.rel_error < 0.02);
    }
    ++sets;
  }
  const double secs = seconds_since(start);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "slope (m(100)-m(50))/50 vs L_p/(2 pi): 10 seeded sets, n <= 4, all p, 4096 "
                "samples; worst rel. error %.4f",
                worst);
  criterion(10, pass && secs < 120.0, secs, buf);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf(
      "NOTE criterion 11: the analytic theorems for general holomorphic curves (defect "
      "relations, exceptional sets, Second Main Theorem) are not reproducible at desk scale; "
      "criteria 6-10 verify their exponential-curve specializations, where the theory reduces "
      "to finite geometry.\n");
  std::printf(failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                            : "ACCEPTANCE: %d criteria FAILED\n",
              failures);
  return failures == 0 ? 0 : 1;
}
