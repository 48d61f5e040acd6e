#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "tnv/json_io.hpp"

namespace tnv {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct CaseResult {
  std::string key;  // canonical input key; reports are sorted by it
  json inputs;
  json computed;
  json expected;
  double residual = 0.0;
  bool pass = false;
  bool flagged = false;  // mismatch outside the regime the source proves
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;
  std::uint64_t seed = 0;
  double tolerance = 0.0;  // 0 for exact suites
  bool resourceCapped = false;

  int total() const { return static_cast<int>(cases.size()); }

  int passed() const {
    int n = 0;
    for (const auto& c : cases) n += c.pass ? 1 : 0;
    return n;
  }

  double maxResidual() const {
    double m = 0.0;
    for (const auto& c : cases) m = std::max(m, std::abs(c.residual));
    return m;
  }

  bool all_pass() const { return passed() == total(); }

  void add(CaseResult c) { cases.push_back(std::move(c)); }

  void finalize() {
    std::stable_sort(cases.begin(), cases.end(),
                     [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
  }

  json to_json() const {
    json arr = json::array();
    for (const auto& c : cases) {
      json item;
      item["key"] = c.key;
      item["inputs"] = c.inputs;
      item["computed"] = c.computed;
      item["expected"] = c.expected;
      item["residual"] = c.residual;
      item["pass"] = c.pass;
      if (c.flagged) item["flagged"] = true;
      arr.push_back(std::move(item));
    }
    json out;
    out["suite"] = suite;
    out["cases"] = std::move(arr);
    out["summary"] = {{"total", total()}, {"passed", passed()}, {"maxResidual", maxResidual()}};
    out["seed"] = seed;
    out["tolerance"] = tolerance;
    out["resourceCapped"] = resourceCapped;
    out["toolVersion"] = kToolVersion;
    out["schemaVersion"] = kSchemaVersion;
    return out;
  }
};

enum class TableFormat { Csv, Markdown };

namespace detail {

inline std::string cell_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

}  // namespace detail

// Deterministic rendering; columns ordered as in the report schema.
inline std::string emit_table(const VerificationReport& report, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::Csv) {
    out << "key,inputs,computed,expected,residual,pass\n";
    for (const auto& c : report.cases) {
      json row[] = {c.key, c.inputs, c.computed, c.expected, c.residual, c.pass};
      for (int k = 0; k < 6; ++k) {
        std::string text = detail::cell_text(row[k]);
        for (char& ch : text)
          if (ch == ',') ch = ';';
        out << (k ? "," : "") << text;
      }
      out << "\n";
    }
  } else {
    out << "| key | inputs | computed | expected | residual | pass |\n";
    out << "| --- | --- | --- | --- | --- | --- |\n";
    for (const auto& c : report.cases) {
      json row[] = {c.key, c.inputs, c.computed, c.expected, c.residual, c.pass};
      out << "|";
      for (int k = 0; k < 6; ++k) out << " " << detail::cell_text(row[k]) << " |";
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace tnv
