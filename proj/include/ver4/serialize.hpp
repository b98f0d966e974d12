// JSON encoding of restricted Lie algebra tables.
#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lie.hpp"
#include "object.hpp"

namespace ver4 {

/// F2 combination as a list of basis labels.
inline nlohmann::json labelList(const BitVector& v, const std::vector<std::string>& labels) {
  nlohmann::json out = nlohmann::json::array();
  v.forEachSetBit([&](std::size_t i) { out.push_back(labels.at(i)); });
  return out;
}

inline BitVector parseLabelList(const nlohmann::json& j, const std::map<std::string, std::size_t>& index) {
  BitVector v(index.size());
  if (j.is_null()) return v;
  if (j.is_string()) {
    v.flip(index.at(j.get<std::string>()));
    return v;
  }
  for (const auto& l : j) {
    auto it = index.find(l.get<std::string>());
    if (it == index.end()) throw std::invalid_argument("unknown basis label '" + l.get<std::string>() + "'");
    v.flip(it->second);
  }
  return v;
}

/// {"basis", "d", "bracket", "square"}; d is a label, null, or a label list
/// for combinations; square vectors outside the basis go to "extraSquares".
inline nlohmann::json lieToJson(const RestrictedLie& l) {
  const auto& labels = l.labels();
  nlohmann::json j;
  j["basis"] = labels;
  nlohmann::json d = nlohmann::json::object();
  for (std::size_t i = 0; i < l.dim(); ++i) {
    const BitVector dv = l.d(l.basis(i));
    if (dv.isZero())
      d[labels[i]] = nullptr;
    else if (dv.count() == 1)
      d[labels[i]] = labels[dv.findFirst()];
    else
      d[labels[i]] = labelList(dv, labels);
  }
  j["d"] = d;
  nlohmann::json br = nlohmann::json::object();
  for (std::size_t a = 0; a < l.dim(); ++a)
    for (std::size_t b = 0; b < l.dim(); ++b)
      br["[" + labels[a] + "," + labels[b] + "]"] = labelList(l.bracketBasis(a, b), labels);
  j["bracket"] = br;
  nlohmann::json sq = nlohmann::json::object();
  for (std::size_t i = 0; i < l.dim(); ++i) {
    const auto s = l.squareBasis(i);
    if (s)
      sq[labels[i]] = labelList(*s, labels);
    else
      sq[labels[i]] = "undefined";
  }
  j["square"] = sq;
  nlohmann::json extra = nlohmann::json::array();
  for (std::size_t k = 0; k < l.squareDomain.size(); ++k)
    if (l.squareDomain[k].count() != 1)
      extra.push_back({{"x", labelList(l.squareDomain[k], labels)}, {"square", labelList(l.squareValues[k], labels)}});
  if (!extra.empty()) j["extraSquares"] = extra;
  return j;
}

inline RestrictedLie lieFromJson(const nlohmann::json& j) {
  const auto labels = j.at("basis").get<std::vector<std::string>>();
  const std::size_t n = labels.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(labels[i], i).second) throw std::invalid_argument("duplicate basis label '" + labels[i] + "'");
  BitMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const BitVector col = parseLabelList(j.at("d").at(labels[i]), index);
    col.forEachSetBit([&](std::size_t r) { d.set(r, i); });
  }
  RestrictedLie l;
  l.object = Ver4Object(labels, std::move(d));
  l.brackets.assign(n * n, BitVector(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::string key = "[" + labels[a] + "," + labels[b] + "]";
      if (j.at("bracket").contains(key)) l.bracketBasis(a, b) = parseLabelList(j.at("bracket").at(key), index);
    }
  Subspace span(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = j.at("square").at(labels[i]);
    if (s.is_string() && s.get<std::string>() == "undefined") continue;
    l.squareDomain.push_back(l.basis(i));
    l.squareValues.push_back(parseLabelList(s, index));
    span.insert(l.basis(i));
  }
  if (j.contains("extraSquares"))
    for (const auto& e : j.at("extraSquares")) {
      const BitVector x = parseLabelList(e.at("x"), index);
      if (!span.insert(x)) continue;
      l.squareDomain.push_back(x);
      l.squareValues.push_back(parseLabelList(e.at("square"), index));
    }
  return l;
}

}  // namespace ver4
