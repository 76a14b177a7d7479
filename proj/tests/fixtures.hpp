#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "ckit/matrix.hpp"
#include "ckit/poly.hpp"

namespace fixtures {

inline nlohmann::json load(const std::string& file) {
  std::ifstream in(std::string(CKIT_FIXTURES) + "/" + file);
  if (!in) throw std::runtime_error("missing fixture " + file);
  return nlohmann::json::parse(in);
}

inline ckit::IntMatrix int_matrix(const nlohmann::json& j) {
  std::vector<std::vector<ckit::Int>> rows;
  for (auto& r : j) {
    std::vector<ckit::Int> row;
    for (auto& x : r) row.emplace_back(x.get<long>());
    rows.push_back(row);
  }
  return ckit::IntMatrix::from_rows(rows);
}

inline ckit::IntMatrix form(const std::string& key) { return int_matrix(load("reference_forms.json").at(key)); }

inline ckit::IntPoly poly(const std::string& key) {
  const nlohmann::json j = load("reference_forms.json");
  std::vector<ckit::Int> c;
  for (auto& x : j.at(key)) c.emplace_back(x.get<long>());
  return ckit::IntPoly(c);
}

}  // namespace fixtures

#include "ckit/seifert.hpp"

namespace fixtures {

inline const std::vector<ckit::KnotRecord>& knots() {
  static const auto records = ckit::ingest_file(std::string(CKIT_FIXTURES) + "/knots.json");
  return records;
}

inline ckit::SeifertMatrix knot(const std::string& name) {
  for (auto& k : knots())
    if (k.name == name) return k.seifert;
  throw std::runtime_error("no fixture knot " + name);
}

}  // namespace fixtures
