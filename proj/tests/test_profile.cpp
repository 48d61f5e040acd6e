#include <doctest.h>

#include <random>

#include "tnv/profile.hpp"

using namespace tnv;

TEST_SUITE_BEGIN("profile");

TEST_CASE("worked profile example, both algorithms") {
  const std::map<int, int> expected{{3, 1}, {4, 2}, {5, 2},  {6, 3},  {7, 4},
                                    {8, 3}, {9, 3}, {10, 2}, {11, 1}, {12, 1}};

  const YoungDiagram lambda({6, 5, 5, 4, 2});
  const ProfileVector geo = profile_geometric(lambda, 7, 13);
  CHECK(geo.values == expected);

  const IndexTuple sigma({0, 1, 4, 7, 9, 10, 12}, 13);
  const ProfileVector balls = profile_balls(sigma, 7, 13);
  CHECK(balls.values == expected);
  CHECK(maya_to_young(sigma, 7, 13) == lambda);
}

TEST_CASE("trivial profiles") {
  CHECK(profile_geometric(YoungDiagram(std::vector<int>{}), 3, 7).values.empty());
  CHECK(profile_balls(IndexTuple({0, 1, 2}), 3, 7).values.empty());

  // Single shift: sigma = (0,...,p-2,p) has profile {p: 1}.
  for (int p = 1; p <= 5; ++p) {
    std::vector<int> e;
    for (int k = 0; k < p - 1; ++k) e.push_back(k);
    e.push_back(p);
    const auto prof = profile_balls(IndexTuple(e), p, p + 3);
    CHECK(prof.values == std::map<int, int>{{p, 1}});
  }
}

TEST_CASE("full rectangle profile and its closed form") {
  for (int n = 2; n <= 9; ++n) {
    for (int p = 1; p <= n; ++p) {
      const int cols = n - p + 1;
      const auto prof = profile_geometric(YoungDiagram(std::vector<int>(p, cols)), p, n);
      long long mass = 0;
      for (int k = 1; k <= n; ++k) {
        const int expected = std::min(std::min(k, p), std::min(cols, n + 1 - k));
        CHECK(prof.at(k) == expected);
        mass += expected;
      }
      CHECK(mass == static_cast<long long>(p) * cols);
    }
  }
}

TEST_CASE("two-algorithm equivalence, exhaustive for n <= 9") {
  for (int n = 1; n <= 9; ++n)
    for (int p = 1; p <= n; ++p)
      for (const auto& sigma : all_tuples(n, p))
        CHECK(profile_geometric(maya_to_young(sigma, p, n), p, n) == profile_balls(sigma, p, n));
}

TEST_CASE("two-algorithm equivalence, randomized up to n = 16") {
  std::mt19937_64 rng(20240517);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 10 + static_cast<int>(rng() % 7);
    const int p = 1 + static_cast<int>(rng() % n);
    std::vector<int> pool(n + 1);
    for (int k = 0; k <= n; ++k) pool[k] = k;
    for (int k = n; k > 0; --k) std::swap(pool[k], pool[rng() % (k + 1)]);
    std::vector<int> entries(pool.begin(), pool.begin() + p);
    std::sort(entries.begin(), entries.end());
    const IndexTuple sigma(entries, n);
    CHECK(profile_geometric(maya_to_young(sigma, p, n), p, n) == profile_balls(sigma, p, n));
  }
}

TEST_CASE("mass equals diagram size") {
  for (int n = 1; n <= 8; ++n)
    for (int p = 1; p <= n; ++p)
      for (const auto& sigma : all_tuples(n, p))
        CHECK(profile_balls(sigma, p, n).mass() == sigma.level());
}

TEST_CASE("support is a contiguous interval") {
  for (int n = 1; n <= 8; ++n)
    for (int p = 1; p <= n; ++p)
      for (const auto& sigma : all_tuples(n, p)) {
        const auto prof = profile_balls(sigma, p, n);
        if (prof.values.empty()) continue;
        const int lo = prof.values.begin()->first;
        const int hi = prof.values.rbegin()->first;
        for (int k = lo; k <= hi; ++k) CHECK(prof.at(k) >= 1);
      }
}

TEST_CASE("hook decomposition of the profile") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const int p = 1 + static_cast<int>(rng() % n);
    const auto& tuples = all_tuples(n, p);
    const IndexTuple sigma = tuples[rng() % tuples.size()];
    const YoungDiagram lambda = maya_to_young(sigma, p, n);

    // Principal hooks: corner (d, d) with the rest of row d and column d.
    const int t = [&] {
      int c = 0;
      while (c < lambda.rows() && lambda.parts[c] > c) ++c;
      return c;
    }();

    std::map<int, int> sum;
    for (int d = 0; d < t; ++d) {
      std::map<int, int> hook;
      for (int c = d; c < lambda.parts[d]; ++c) ++hook[p - (d + 1) + (c + 1)];
      for (int r = d + 1; r < lambda.rows() && lambda.parts[r] > d; ++r)
        ++hook[p - (r + 1) + (d + 1)];
      // A placed hook covers a contiguous diagonal interval, once each.
      if (!hook.empty()) {
        const int lo = hook.begin()->first;
        const int hi = hook.rbegin()->first;
        for (int k = lo; k <= hi; ++k) CHECK(hook[k] == 1);
        // Its second-difference contribution telescopes to four terms: check
        // against a random sequence.
        std::vector<long long> a(n + 2);
        for (auto& x : a) x = static_cast<long long>(rng() % 201) - 100;
        a[0] = a[n + 1] = 0;
        long long viaProfile = 0;
        for (auto& [k, cnt] : hook) viaProfile += cnt * (a[k - 1] - 2 * a[k] + a[k + 1]);
        const long long fourTerm = a[lo - 1] - a[lo] - a[hi] + a[hi + 1];
        CHECK(viaProfile == fourTerm);
      }
      for (auto& [k, v] : hook) sum[k] += v;
    }
    CHECK(sum == profile_geometric(lambda, p, n).values);
  }
}

TEST_CASE("adding one cell increments exactly one diagonal") {
  for (int n = 2; n <= 7; ++n)
    for (int p = 1; p <= n; ++p)
      for (const auto& sigma : all_tuples(n, p)) {
        const YoungDiagram lambda = maya_to_young(sigma, p, n);
        const auto before = profile_geometric(lambda, p, n);
        for (int r = 0; r < std::min(p, lambda.rows() + 1); ++r) {
          const int limit = (r == 0) ? n - p + 1 : lambda.part(r - 1);
          if (lambda.part(r) >= limit) continue;
          std::vector<int> parts = lambda.parts;
          if (r < static_cast<int>(parts.size())) ++parts[r];
          else parts.push_back(1);
          const auto after = profile_geometric(YoungDiagram(parts), p, n);
          int changed = 0;
          for (int k = 1; k <= n; ++k) {
            const int diff = after.at(k) - before.at(k);
            CHECK(diff >= 0);
            CHECK(diff <= 1);
            changed += diff;
          }
          CHECK(changed == 1);
        }
      }
}

TEST_CASE("phi examples") {
  // All-ones stationary vector turns phi into the diagram size.
  const YoungDiagram fig({6, 5, 5, 4, 2});
  CHECK(phi(fig, 7, 13, StationaryVector(std::vector<long long>(13, 1))) == 22);
  CHECK(phi(YoungDiagram(std::vector<int>{}), 4, 9, StationaryVector(std::vector<long long>(9, 3))) == 0);

  // lambda = (1): phi = v_p.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const int p = 1 + static_cast<int>(rng() % n);
    std::vector<long long> v(n);
    for (auto& x : v) x = rng() % 10;
    CHECK(phi(YoungDiagram({1}), p, n, StationaryVector(v)) == v[p - 1]);
  }

  CHECK_THROWS_AS(phi(YoungDiagram({1}), 2, 5, StationaryVector({1, 2})), input_error);
}

TEST_SUITE_END();
