#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "tnv/curve.hpp"
#include "tnv/diagrams.hpp"
#include "tnv/profile.hpp"

namespace tnv {

using json = nlohmann::json;

// Young diagrams and index tuples serialize as plain integer arrays, Maya
// diagrams as '.'/'o' strings, profiles as {"k": n_lambda(k)} objects.

inline json to_json(const YoungDiagram& lambda) { return json(lambda.parts); }

inline json to_json(const IndexTuple& sigma) { return json(sigma.entries); }

inline json to_json(const ProfileVector& prof) {
  json obj = json::object();
  for (auto& [k, v] : prof.values) obj[std::to_string(k)] = v;
  return obj;
}

inline YoungDiagram young_from_json(const json& j) {
  return YoungDiagram(j.get<std::vector<int>>());
}

inline IndexTuple tuple_from_json(const json& j) {
  return IndexTuple(j.get<std::vector<int>>());
}

inline json to_json(const BigInt& v) { return json(v.str()); }

inline json to_json(const Rational& q) { return json(rational_to_string(q)); }

// Polynomials serialize as coefficient arrays in ascending powers, each
// coefficient a "num/den" string (or plain integer string).
inline json to_json(const Polynomial& f) {
  json arr = json::array();
  for (const auto& c : f.c) arr.push_back(rational_to_string(c));
  return arr;
}

inline Polynomial polynomial_from_json(const json& j) {
  std::vector<Rational> c;
  for (const auto& item : j) {
    if (item.is_number_integer())
      c.push_back(Rational(item.get<long long>()));
    else
      c.push_back(parse_rational(item.get<std::string>()));
  }
  return Polynomial(std::move(c));
}

inline PolyCurve curve_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw input_error("curve JSON must be a non-empty array of coefficient arrays");
  std::vector<Polynomial> comps;
  for (const auto& comp : j) comps.push_back(polynomial_from_json(comp));
  return PolyCurve(std::move(comps));
}

inline std::string tuple_key(const std::vector<int>& sigma) {
  std::string key;
  for (size_t k = 0; k < sigma.size(); ++k) {
    if (k) key += ',';
    key += std::to_string(sigma[k]);
  }
  return key;
}

inline json to_json(const PlueckerMap& coords) {
  json obj = json::object();
  for (const auto& [sigma, poly] : coords) obj[tuple_key(sigma)] = to_json(poly);
  return obj;
}

}  // namespace tnv
