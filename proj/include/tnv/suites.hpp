#pragma once

#include <optional>
#include <random>
#include <string>

#include "tnv/expcurve.hpp"
#include "tnv/report.hpp"
#include "tnv/sums.hpp"
#include "tnv/wedge.hpp"

namespace tnv {

struct SuiteParams {
  int n = 6;
  int p = 2;
  int i = 3;
  int trials = 100;
  std::uint64_t seed = 2024;
  int samples = 1024;
  std::string preset;
  std::optional<FrequencySet> points;
  std::optional<PolyCurve> curve;
};

namespace detail {

// Deterministic bounded draw; avoids distribution objects, whose output is
// implementation-defined.
inline long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline BoundarySequence draw_sequence(int n, std::mt19937_64& rng) {
  std::vector<Rational> a(n + 2, Rational(0));
  for (int k = 1; k <= n; ++k) a[k] = Rational(draw(rng, -100, 100));
  return BoundarySequence(std::move(a));
}

inline FrequencySet draw_integer_points(int n, std::mt19937_64& rng, int span = 19) {
  std::set<PointQ> seen;
  while (static_cast<int>(seen.size()) < n + 1)
    seen.insert({Rational(draw(rng, -span, span)), Rational(draw(rng, -span, span))});
  return FrequencySet(std::vector<PointQ>(seen.begin(), seen.end()));
}

inline std::string two(int v) {
  std::string s = std::to_string(v);
  return s.size() < 2 ? "0" + s : s;
}

}  // namespace detail

inline FrequencySet preset_points(const std::string& name) {
  if (name == "paper-n5")
    return FrequencySet({{Rational(0), Rational(0)},
                         {Rational(0), Rational(1)},
                         {Rational(1), Rational(0)},
                         {Rational(1), Rational(1)},
                         {Rational(1), Rational(2)},
                         {Rational(2), Rational(1)}});
  throw input_error("unknown preset: " + name);
}

inline VerificationReport run_diagrams_suite(const SuiteParams& params) {
  VerificationReport rep;
  rep.suite = "diagrams";
  rep.seed = params.seed;
  const int n = params.n;

  for (int p = 1; p <= n; ++p) {
    const long long q = static_cast<long long>(p) * (n - p + 1);
    const std::string np = "n=" + detail::two(n) + ",p=" + detail::two(p);

    {
      CaseResult c;
      c.key = "grading:" + np;
      c.inputs = {{"n", n}, {"p", p}};
      BigInt total = 0;
      for (int s = 0; s <= q; ++s) total += static_cast<long long>(graded_level(n, p, s).size());
      c.computed = to_json(total);
      c.expected = to_json(binomial(n + 1, p));
      c.pass = (total == binomial(n + 1, p));
      rep.add(std::move(c));
    }
    {
      CaseResult c;
      c.key = "gauss-sum:" + np;
      c.inputs = {{"n", n}, {"p", p}};
      const BigInt got = weighted_level_sum(n, p);
      BigInt expected = BigInt(q) * binomial(n + 1, p) / 2;
      c.computed = to_json(got);
      c.expected = to_json(expected);
      c.pass = (got == expected);
      rep.add(std::move(c));
    }
    {
      CaseResult c;
      c.key = "round-trip:" + np;
      c.inputs = {{"n", n}, {"p", p}};
      long long ok = 0, all = 0;
      for (const auto& sigma : all_tuples(n, p)) {
        ++all;
        const YoungDiagram lambda = maya_to_young(sigma, p, n);
        if (young_to_maya(lambda, p, n) == sigma && lambda.size() == sigma.level() &&
            complement(complement(lambda, p, n), p, n) == lambda)
          ++ok;
      }
      c.computed = ok;
      c.expected = all;
      c.pass = (ok == all);
      rep.add(std::move(c));
    }
    {
      CaseResult c;
      c.key = "partition-bound:" + np;
      c.inputs = {{"n", n}, {"p", p}};
      bool ok = true;
      for (int s = 0; s <= q; ++s) {
        const auto r = level_count_bound(n, p, s);
        ok = ok && (BigInt(r.count) <= r.partitionValue) &&
             (r.equalityHolds == (s <= std::min(n - p + 1, p)) || s == 0);
      }
      c.computed = ok;
      c.expected = true;
      c.pass = ok;
      rep.add(std::move(c));
    }
  }
  rep.finalize();
  return rep;
}

inline VerificationReport run_tableaux_suite(const SuiteParams& params) {
  VerificationReport rep;
  rep.suite = "tableaux";
  rep.seed = params.seed;
  const int n = params.n;
  const int p = params.p;
  const int cols = n - p + 1;
  const long long q = static_cast<long long>(p) * cols;

  try {
    for (int j = 0; j <= n - p; ++j) {
      CaseResult c;
      c.key = "edge-sum:side=empty,j=" + detail::two(j);
      c.inputs = {{"n", n}, {"p", p}, {"j", j}, {"side", "empty"}};
      const BigInt got = edge_sum(j, EdgeSide::Empty, p, n);
      const BigInt expected = edge_sum_closed_form(EdgeSide::Empty, p, n);
      c.computed = to_json(got);
      c.expected = to_json(expected);
      c.pass = (got == expected);
      c.flagged = !c.pass;  // the closed form is proved for p < n-p+1; flag, do not hide
      rep.add(std::move(c));
    }
    for (int j = p; j <= n; ++j) {
      CaseResult c;
      c.key = "edge-sum:side=ball,j=" + detail::two(j);
      c.inputs = {{"n", n}, {"p", p}, {"j", j}, {"side", "ball"}};
      const BigInt got = edge_sum(j, EdgeSide::Ball, p, n);
      const BigInt expected = edge_sum_closed_form(EdgeSide::Ball, p, n);
      c.computed = to_json(got);
      c.expected = to_json(expected);
      c.pass = (got == expected);
      c.flagged = !c.pass;
      rep.add(std::move(c));
    }

    {
      CaseResult c;
      c.key = "rect-count-agreement";
      const YoungDiagram rect(std::vector<int>(p, cols));
      c.inputs = {{"shape", to_json(rect)}};
      const BigInt viaHooks = f_hook(rect);
      const BigInt viaRec = f_recursive(rect);
      json computed = {{"f_hook", viaHooks.str()}, {"f_recursive", viaRec.str()}};
      bool pass = (viaHooks == viaRec);
      if (q <= enumeration_cap(14)) {
        BigInt count = 0;
        for_each_syt(rect, [&](const StandardTableau&) { ++count; });
        computed["enumerated"] = count.str();
        pass = pass && (count == viaHooks);
      }
      c.computed = std::move(computed);
      c.expected = to_json(viaHooks);
      c.pass = pass;
      rep.add(std::move(c));
    }

    for (int r = 0; r <= q; ++r) {
      CaseResult c;
      c.key = "chain-conservation:rank=" + detail::two(r);
      c.inputs = {{"n", n}, {"p", p}, {"rank", r}};
      BigInt total = 0;
      for (const auto& sigma : graded_level(n, p, r))
        total += chains_through(maya_to_young(sigma, p, n), p, n);
      const BigInt expected = f_hook(YoungDiagram(std::vector<int>(p, cols)));
      c.computed = to_json(total);
      c.expected = to_json(expected);
      c.pass = (total == expected);
      rep.add(std::move(c));
    }

    {
      // Brute-force chain walk vs f * f-hat; the walk is the capped part.
      CaseResult c;
      c.key = "chain-walk-agreement";
      c.inputs = {{"n", n}, {"p", p}};
      bool ok = true;
      for (const auto& [lambda, count] : chain_visit_counts(p, n))
        ok = ok && (count == chains_through(lambda, p, n));
      c.computed = ok;
      c.expected = true;
      c.pass = ok;
      rep.add(std::move(c));
    }

    for (int k = 1; k <= n; ++k) {
      CaseResult c;
      c.key = "tableau-profile:k=" + detail::two(k);
      c.inputs = {{"n", n}, {"p", p}, {"k", k}};
      const auto r = tableau_profile_sum(k, p, n);
      json computed = {{"closedForm", r.closedForm.str()}};
      if (r.enumerated) computed["enumerated"] = r.enumerated->str();
      c.computed = std::move(computed);
      c.expected = to_json(r.closedForm);
      c.pass = !r.enumerated || r.verified;
      rep.add(std::move(c));
    }
  } catch (const resource_error&) {
    rep.resourceCapped = true;
  }
  rep.finalize();
  return rep;
}

inline VerificationReport run_wedge_suite(const SuiteParams& params) {
  VerificationReport rep;
  rep.suite = "wedge";
  rep.seed = params.seed;

  for (int p = 1; p <= 4; ++p) {
    for (int i = 0; i <= 8; ++i) {
      CaseResult c;
      c.key = "leibniz:p=" + detail::two(p) + ",i=" + detail::two(i);
      c.inputs = {{"p", p}, {"i", i}};
      FormalWedge iterated = wedge_identity(p);
      for (int k = 0; k < i; ++k) iterated = derive_formal(iterated);
      const FormalWedge direct = derivative_syt(p, i);
      bool homogeneous = true;
      for (const auto& [tuple, coeff] : direct.terms)
        homogeneous = homogeneous && (IndexTuple(tuple).level() == i);
      c.computed = {{"terms", static_cast<int>(direct.terms.size())},
                    {"equal", direct == iterated},
                    {"homogeneous", homogeneous}};
      c.expected = {{"equal", true}, {"homogeneous", true}};
      c.pass = (direct == iterated) && homogeneous;
      rep.add(std::move(c));
    }
  }

  for (int n = 1; n <= 6; ++n) {
    for (int p = 1; p <= n; ++p) {
      CaseResult c;
      c.key = "rnc-degree:n=" + detail::two(n) + ",p=" + detail::two(p);
      c.inputs = {{"n", n}, {"p", p}};
      const int got = associated_curve_degree(rational_normal_curve(n), p);
      c.computed = got;
      c.expected = p * (n - p + 1);
      c.pass = (got == p * (n - p + 1));
      rep.add(std::move(c));
    }
  }

  // Vanishing-order agreement for a supplied curve, or for built-in samples.
  std::vector<std::pair<std::string, PolyCurve>> curves;
  if (params.curve) {
    curves.emplace_back("input", *params.curve);
  } else {
    curves.emplace_back("rnc-4", rational_normal_curve(4));
    curves.emplace_back("cuspidal",
                        PolyCurve({Polynomial({Rational(1)}),
                                   Polynomial({Rational(0), Rational(0), Rational(1)}),
                                   Polynomial({Rational(0), Rational(0), Rational(0), Rational(1)})}));
  }
  for (const auto& [name, curve] : curves) {
    for (int p = 1; p <= curve.n() + 1; ++p) {
      CaseResult c;
      c.key = "d-order:curve=" + name + ",p=" + detail::two(p);
      c.inputs = {{"curve", name}, {"p", p}};
      try {
        const auto agreement = verify_d_against_pluecker(curve, p, Rational(0));
        c.computed = {{"coordinates", static_cast<int>(agreement.entries.size())},
                      {"all_match", agreement.all_match}};
        c.expected = {{"all_match", true}};
        c.pass = agreement.all_match;
      } catch (const input_error& err) {
        c.computed = {{"error", err.what()}};
        c.expected = {{"all_match", true}};
        c.pass = false;
      }
      rep.add(std::move(c));
    }
  }
  rep.finalize();
  return rep;
}

inline VerificationReport run_sums_suite(const SuiteParams& params) {
  VerificationReport rep;
  rep.suite = "sums";
  rep.seed = params.seed;
  const int n = params.n;
  const int p = params.p;
  std::mt19937_64 rng(params.seed);

  Rational maxBalanced = 0, maxWeighted = 0, maxChainGap = 0, maxAk = 0, maxSecond = 0;
  bool chainAvailable = (static_cast<long long>(p) * (n - p + 1) <= enumeration_cap(16));
  for (int t = 0; t < params.trials; ++t) {
    const BoundarySequence a = detail::draw_sequence(n, rng);
    maxBalanced = std::max(maxBalanced, Rational(abs(balanced_sum(a, p))));
    const auto w = weighted_balanced_sum(a, p, chainAvailable);
    maxWeighted = std::max(maxWeighted, Rational(abs(w.weighted)));
    if (w.chain_form) maxChainGap = std::max(maxChainGap, Rational(abs(*w.chain_form - w.weighted)));
    maxAk = std::max(maxAk, Rational(abs(ak_identity_residual(a, p))));

    std::vector<Rational> abar = a.a;
    abar[n + 1] = Rational(detail::draw(rng, -100, 100));
    maxSecond = std::max(maxSecond, Rational(abs(second_diff_sum_residual(abar, p))));
  }

  const auto residual_case = [&](const std::string& identity, const Rational& residual) {
    CaseResult c;
    c.key = identity;
    c.inputs = {{"n", n}, {"p", p}, {"trials", params.trials}};
    c.computed = {{"identity", identity},
                  {"max_abs_residual", rational_to_string(residual)},
                  {"trials", params.trials}};
    c.expected = {{"max_abs_residual", "0"}};
    c.residual = static_cast<double>(residual);
    c.pass = (residual == 0);
    return c;
  };

  rep.add(residual_case("balanced-sum", maxBalanced));
  rep.add(residual_case("weighted-balanced-sum", maxWeighted));
  if (chainAvailable) rep.add(residual_case("weighted-chain-agreement", maxChainGap));
  rep.add(residual_case("ak-identity", maxAk));
  rep.add(residual_case("second-diff-sum", maxSecond));

  {
    CaseResult c;
    c.key = "alpha-coefficients";
    c.inputs = {{"n", n}, {"p", p}};
    const auto alpha = alpha_coefficients(n, p);
    bool ok = true;
    for (int k = 1; k <= p; ++k) ok = ok && (alpha[k] == binomial(n, p) * k);
    for (int k = p; k <= n; ++k) ok = ok && (alpha[k] == binomial(n, p - 1) * (n + 1 - k));
    c.computed = ok;
    c.expected = true;
    c.pass = ok;
    rep.add(std::move(c));
  }
  {
    Rational maxBrill = 0;
    bool piene = true;
    for (int t = 0; t < params.trials; ++t) {
      const int nn = 1 + static_cast<int>(detail::draw(rng, 0, 5));
      std::vector<long long> sigma(nn);
      for (auto& s : sigma) s = detail::draw(rng, 0, 4);
      const auto r = brill_segre_check(detail::draw(rng, 0, 3), detail::draw(rng, 1, 12), sigma, nn);
      maxBrill = std::max(maxBrill, Rational(abs(r.residual)));
      piene = piene && r.pieneMatches;
    }
    CaseResult c = residual_case("brill-segre", maxBrill);
    c.computed["pieneMatches"] = piene;
    c.pass = c.pass && piene;
    rep.add(std::move(c));
  }
  rep.finalize();
  return rep;
}

inline VerificationReport run_expcurve_suite(const SuiteParams& params) {
  VerificationReport rep;
  rep.suite = "expcurve";
  rep.seed = params.seed;
  rep.tolerance = 1e-9;

  std::mt19937_64 rng(params.seed);
  const bool exactPreset = (params.preset == "paper-n5");
  const FrequencySet fs = params.points   ? *params.points
                          : !params.preset.empty() ? preset_points(params.preset)
                                                   : detail::draw_integer_points(params.n, rng);
  const int n = fs.n();
  const auto seq = perimeter_sequence(fs);

  if (exactPreset) {
    const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0);
    const std::pair<const char*, std::pair<double, double>> exact[] = {
        {"preset:L1", {seq.L[1], 2 + 3 * s2}},
        {"preset:L2", {seq.L[2], 4 + s2 + 2 * s5}},
        {"preset:L3", {seq.L[3], 8 + 2 * s2}},
        {"preset:L2^(2)", {l_ip_perimeter(fs, 2, 2), 10 + 5 * s2}},
        {"preset:L3^(2)", {l_ip_perimeter(fs, 2, 3), 8 + 4 * s2 + 4 * s5}},
        {"preset:middle(p=2,i=3)", {peculiar_middle(fs, 2, 3).middle, 8 + 7 * s2 + 2 * s5}},
    };
    for (const auto& [key, pair] : exact) {
      CaseResult c;
      c.key = key;
      c.inputs = {{"preset", "paper-n5"}};
      c.computed = pair.first;
      c.expected = pair.second;
      c.residual = std::abs(pair.first - pair.second);
      c.pass = c.residual <= 1e-9;
      rep.add(std::move(c));
    }
  }

  for (int k = 1; k <= n; ++k) {
    CaseResult c;
    c.key = "concavity:k=" + detail::two(k);
    c.inputs = {{"k", k}};
    const double second = seq.second_difference(k);
    c.computed = second;
    c.expected = "<= 0";
    c.residual = std::max(0.0, second);
    c.pass = second <= 1e-9;
    rep.add(std::move(c));
  }

  {
    CaseResult c;
    c.key = "symmetry";
    const auto sym = symmetry_check(fs);
    c.computed = sym.max_abs_diff;
    c.expected = 0.0;
    c.residual = sym.max_abs_diff;
    c.pass = sym.pass;
    rep.add(std::move(c));
  }

  for (int p = 1; p <= n; ++p) {
    CaseResult c;
    c.key = "minkowski:p=" + detail::two(p);
    c.inputs = {{"p", p}};
    const auto r = minkowski_identity_check(fs, p);
    c.computed = {{"set_equal", r.set_equal},
                  {"lhs_perimeter", r.lhs_perimeter},
                  {"rhs_perimeter", r.rhs_perimeter}};
    c.expected = {{"set_equal", true}};
    c.residual = std::abs(r.lhs_perimeter - r.rhs_perimeter);
    c.pass = r.set_equal && r.perimeters_match;
    rep.add(std::move(c));
  }

  for (int p = 1; p <= n; ++p) {
    const int q = p * (n - p + 1);
    for (const auto& r : peculiar_sweep(fs, p, q)) {
      CaseResult c;
      c.key = "peculiar:p=" + detail::two(p) + ",i=" + detail::two(r.i);
      c.inputs = {{"p", p}, {"i", r.i}};
      c.computed = {{"L_p", r.L_p}, {"middle", r.middle}, {"L_ip", r.L_ip}};
      c.expected = {{"left", "L_p <= middle"}, {"right", "middle <= L_ip"}};
      c.residual = std::max(0.0, std::max(r.L_p - r.middle, r.middle - r.L_ip));
      c.pass = r.left_ok && r.right_ok;
      rep.add(std::move(c));
    }
  }

  for (int p = 1; p <= std::min(n, 4); ++p) {
    const int q = p * (n - p + 1);
    for (int i = 1; i <= q; ++i) {
      const auto r = fujimoto_sharpness(n, p, i);
      CaseResult c;
      c.key = "sharpness:p=" + detail::two(p) + ",i=" + detail::two(i);
      c.inputs = {{"n", n}, {"p", p}, {"i", i}};
      c.computed = {{"middle", r.middle}, {"L_ip", r.L_ip}};
      c.expected = static_cast<double>(r.closed_form);
      c.residual = std::max(std::abs(r.middle - r.closed_form), std::abs(r.L_ip - r.closed_form));
      c.pass = r.pass;
      rep.add(std::move(c));
    }
  }

  if (exactPreset) {
    for (int p = 1; p <= 2; ++p) {
      CaseResult c;
      c.key = "slope:p=" + detail::two(p);
      c.inputs = {{"p", p}, {"r1", 50}, {"r2", 100}, {"samples", params.samples}};
      const auto r = numerical_order_slope(fs, p, 50, 100, params.samples);
      c.computed = r.slope;
      c.expected = r.expected;
      c.residual = r.rel_error;
      c.pass = r.rel_error < 0.02;
      rep.add(std::move(c));
    }
  }
  rep.finalize();
  return rep;
}

inline VerificationReport run_suite(const std::string& name, const SuiteParams& params) {
  if (name == "diagrams") return run_diagrams_suite(params);
  if (name == "tableaux") return run_tableaux_suite(params);
  if (name == "wedge") return run_wedge_suite(params);
  if (name == "sums") return run_sums_suite(params);
  if (name == "expcurve") return run_expcurve_suite(params);
  if (name == "all") {
    VerificationReport rep;
    rep.suite = "all";
    rep.seed = params.seed;
    for (const char* sub : {"diagrams", "tableaux", "wedge", "sums", "expcurve"}) {
      VerificationReport part = run_suite(sub, params);
      rep.resourceCapped = rep.resourceCapped || part.resourceCapped;
      rep.tolerance = std::max(rep.tolerance, part.tolerance);
      for (auto& c : part.cases) {
        c.key = std::string(sub) + "/" + c.key;
        rep.add(std::move(c));
      }
    }
    rep.finalize();
    return rep;
  }
  throw input_error("unknown suite: " + name);
}

}  // namespace tnv
