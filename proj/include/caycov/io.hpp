#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "caycov/cayley.hpp"
#include "caycov/errors.hpp"
#include "caycov/modring.hpp"
#include "caycov/partition.hpp"

namespace caycov {

using json = nlohmann::json;

inline json to_json(const Partition& p) {
  json arr = json::array();
  for (int v : p.parts()) arr.push_back(v);
  return arr;
}

inline Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("partition: expected an array of integers");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ValidationError("partition: expected integer parts");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

// {"2":[2,1],"3":[1]} with decimal prime keys
inline json to_json(const GroupType& t) {
  json obj = json::object();
  for (const auto& [p, part] : t.components()) obj[std::to_string(p)] = to_json(part);
  return obj;
}

inline GroupType group_type_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("group type: expected an object keyed by primes");
  GroupType t;
  for (auto it = j.begin(); it != j.end(); ++it) {
    long long p = 0;
    try {
      p = std::stoll(it.key());
    } catch (const std::exception&) {
      throw ValidationError("group type: non-numeric prime key '" + it.key() + "'");
    }
    t.set(p, partition_from_json(it.value()));
  }
  return t;
}

// Input document: {"orders":[...], "generators":[[...],...]}
inline CayleySpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("orders") || !j.contains("generators")) {
    throw ValidationError("cayley spec: expected {\"orders\":[...],\"generators\":[[...],...]}");
  }
  std::vector<long long> orders;
  for (const auto& v : j.at("orders")) orders.push_back(v.get<long long>());
  std::vector<std::vector<long long>> gens;
  for (const auto& row : j.at("generators")) {
    std::vector<long long> coords;
    for (const auto& v : row) coords.push_back(v.get<long long>());
    gens.push_back(std::move(coords));
  }
  return CayleySpec::parse_and_validate(orders, gens);
}

// Canonical form for golden tests: orders, sorted pair reps, sorted involutions.
inline json canonical_json(const CayleySpec& spec) {
  json j;
  j["orders"] = spec.factor_orders();
  j["pairs"] = json::array();
  for (const auto& y : spec.pairs()) j["pairs"].push_back(y);
  j["involutions"] = json::array();
  for (const auto& y : spec.involutions()) j["involutions"].push_back(y);
  return j;
}

// Row-major entries with (p, k) metadata.
inline json to_json(const PModMatrix& m) {
  json j;
  j["p"] = m.p;
  j["k"] = m.k;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  j["entries"] = m.entries;
  return j;
}

inline PModMatrix pmod_matrix_from_json(const json& j) {
  PModMatrix m(j.at("p").get<long long>(), j.at("k").get<int>(), j.at("rows").get<std::size_t>(),
               j.at("cols").get<std::size_t>());
  const auto& entries = j.at("entries");
  if (entries.size() != m.rows * m.cols) throw ValidationError("matrix: entry count mismatch");
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    m.entries[i] = m.reduce(entries[i].get<long long>());
  }
  return m;
}

// Command-line partition syntax: comma-separated decreasing parts; "" and "0"
// denote the trivial type.
inline Partition parse_partition(const std::string& text) {
  if (text.empty() || text == "0") return Partition();
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      parts.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ValidationError("partition: bad part '" + item + "'");
    }
  }
  return Partition(std::move(parts));
}

// Command-line group-type syntax: semicolon-separated "p:[parts]" items;
// "1" denotes the trivial group.
inline GroupType parse_group_type(const std::string& text) {
  GroupType t;
  if (text.empty() || text == "1") return t;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw ValidationError("group type: expected 'p:[parts]' in '" + item + "'");
    long long p = 0;
    try {
      p = std::stoll(item.substr(0, colon));
    } catch (const std::exception&) {
      throw ValidationError("group type: bad prime in '" + item + "'");
    }
    std::string rest = item.substr(colon + 1);
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') {
      throw ValidationError("group type: expected bracketed parts in '" + item + "'");
    }
    t.set(p, parse_partition(rest.substr(1, rest.size() - 2)));
  }
  return t;
}

inline json load_json_file_or_inline(const std::string& arg) {
  // try as a path first, then as inline JSON
  std::ifstream in(arg);
  if (in.good()) {
    json j;
    in >> j;
    return j;
  }
  return json::parse(arg);
}

}  // namespace caycov
