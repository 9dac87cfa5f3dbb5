#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "plethysm/hwv.hpp"
#include "plethysm/partitions.hpp"
#include "plethysm/plethystic.hpp"
#include "plethysm/symfunc.hpp"

namespace plethysm {

/// Parses a weight such as "3,1,2" or "(3,1,2)"; unlike partitions the parts
/// need not decrease and zeros are allowed.
inline Composition parse_composition(std::string_view text) {
  if (!text.empty() && (text.front() == '(' || text.front() == '[')) {
    require(text.size() >= 2, "unbalanced brackets in composition");
    text = text.substr(1, text.size() - 2);
  }
  Composition out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view tok = text.substr(start, comma - start);
    require(!tok.empty(), "empty part in composition");
    int v = 0;
    for (char ch : tok) {
      require(ch >= '0' && ch <= '9', "invalid character in composition '" + std::string(text) + "'");
      v = v * 10 + (ch - '0');
      require(v <= 100000, "composition part too large");
    }
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

inline nlohmann::json to_json(const SchurVector& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lambda, c] : v) terms.push_back({{"lambda", lambda.parts()}, {"coeff", c}});
  return {{"degree", v.degree()}, {"terms", terms}};
}

inline SchurVector schur_vector_from_json(const nlohmann::json& j) {
  try {
    SchurVector v(j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) v.add(Partition(t.at("lambda").get<std::vector<int>>()), t.at("coeff").get<Coeff>());
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed SchurVector JSON: ") + e.what());
  }
}

/// Basis keys of a weight vector in the outer order.
inline std::vector<std::pair<PlethysticTableau, Coeff>> sorted_terms(const HwVector& v) {
  std::vector<std::pair<PlethysticTableau, Coeff>> terms(v.coeffs.begin(), v.coeffs.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.shape() != b.first.shape()) return a.first.shape() < b.first.shape();
    return tableau_less(a.first, b.first);
  });
  return terms;
}

inline nlohmann::json to_json(const HwVector& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [T, c] : sorted_terms(v)) terms.push_back({{"tableau", to_string(T)}, {"coeff", c}});
  return {{"mu", v.mu.parts()}, {"nu", v.nu.parts()}, {"d", v.d}, {"weight", v.weight}, {"terms", terms}};
}

inline HwVector hw_vector_from_json(const nlohmann::json& j) {
  try {
    HwVector v{Partition(j.at("mu").get<std::vector<int>>()), Partition(j.at("nu").get<std::vector<int>>()),
               j.at("d").get<int>(), trim(j.at("weight").get<Composition>()), {}};
    for (const auto& t : j.at("terms")) v.coeffs.add(parse_pssyt(t.at("tableau").get<std::string>()), t.at("coeff").get<Coeff>());
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed HwVector JSON: ") + e.what());
  }
}

/// "s[4] + s[2,2]"-style one-line rendering; zero prints as "0".
inline std::string to_text(const SchurVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [lambda, c] : v) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const Coeff a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "*";
    s += "s" + to_string(lambda);
  }
  return s;
}

/// Two aligned columns: partition, then value.
template <typename Rows>
std::string aligned_table(const Rows& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

}  // namespace plethysm
