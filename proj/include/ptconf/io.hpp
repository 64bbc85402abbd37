#pragma once

// Canonical JSON and text renderings of exact values.

#include <json.hpp>

#include <string>
#include <vector>

#include "ptconf/exactalg.hpp"

namespace ptconf::io {

using json = nlohmann::ordered_json;

inline std::string rational_string(const Rational& x) { return to_string(x); }

/// {"unit":"q^{1/2}","coeffs":{"<half-exponent>":"<p/q>",...}}, exponents ascending.
inline json to_json(const LaurentHalf& p) {
  json coeffs = json::object();
  for (const auto& [e, c] : p.coeffs()) coeffs[std::to_string(e)] = rational_string(c);
  json out;
  out["unit"] = "q^{1/2}";
  out["coeffs"] = std::move(coeffs);
  return out;
}

inline json to_json(const BigInt& x) { return x.get_str(); }
inline json to_json(const Rational& x) { return rational_string(x); }

inline json to_json(const std::vector<BigInt>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(x.get_str());
  return arr;
}

/// Comma-separated coefficients from the lowest to the highest power.
inline std::string coefficient_row(const LaurentHalf& p) {
  std::string s;
  for (const auto& c : p.coefficient_list()) s += (s.empty() ? "" : ",") + rational_string(c);
  return s.empty() ? "0" : s;
}

inline std::string dump(const json& j) { return j.dump(); }

}  // namespace ptconf::io
