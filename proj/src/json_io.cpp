#include "hyperarr/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hyperarr/errors.hpp"

namespace hyperarr {

namespace {

Rational rational_from_json(const json& v, const char* where) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer())
    return Rational::parse(std::to_string(v.get<std::int64_t>()));
  throw ParseError(std::string(where) +
                   ": expected a rational string or integer");
}

std::vector<int> indices_from_json(const json& v, const char* where) {
  if (!v.is_array()) throw ParseError(std::string(where) + ": expected an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const json& e : v) {
    if (!e.is_number_integer())
      throw ParseError(std::string(where) + ": expected integer indices");
    const std::int64_t i = e.get<std::int64_t>();
    if (i < 1) throw ParseError(std::string(where) + ": indices are 1-based");
    out.push_back(static_cast<int>(i - 1));
  }
  return out;
}

json indices_to_json(const std::vector<int>& idx) {
  json out = json::array();
  for (int i : idx) out.push_back(i + 1);
  return out;
}

}  // namespace

json arrangement_to_json(const Arrangement& a) {
  json j;
  j["k"] = a.k();
  json normals = json::array();
  for (const Vec& row : a.normals()) {
    json r = json::array();
    for (const Rational& x : row) r.push_back(x.str());
    normals.push_back(std::move(r));
  }
  j["normals"] = std::move(normals);
  if (!a.labels().empty()) j["labels"] = a.labels();
  return j;
}

Arrangement arrangement_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("arrangement: expected a JSON object");
  if (!j.contains("k") || !j["k"].is_number_integer())
    throw ParseError("arrangement: missing integer field 'k'");
  const int k = j["k"].get<int>();
  if (!j.contains("normals") || !j["normals"].is_array())
    throw ParseError("arrangement: missing array field 'normals'");
  std::vector<Vec> normals;
  normals.reserve(j["normals"].size());
  for (const json& row : j["normals"]) {
    if (!row.is_array()) throw ParseError("arrangement: each normal must be an array");
    Vec v;
    v.reserve(row.size());
    for (const json& e : row) v.push_back(rational_from_json(e, "arrangement normal"));
    normals.push_back(std::move(v));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array())
      throw ParseError("arrangement: 'labels' must be an array of strings");
    for (const json& e : j["labels"]) {
      if (!e.is_string()) throw ParseError("arrangement: labels must be strings");
      labels.push_back(e.get<std::string>());
    }
  }
  return Arrangement(k, std::move(normals), std::move(labels));
}

std::string serialize_arrangement(const Arrangement& a) {
  return arrangement_to_json(a).dump(2) + "\n";
}

Arrangement parse_arrangement(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("arrangement: invalid JSON: ") + e.what());
  }
  return arrangement_from_json(j);
}

Arrangement load_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str());
}

json partition_to_json(const GoodPartition& p) {
  json j;
  j["s"] = p.s();
  json blocks = json::array();
  for (const auto& b : p.blocks()) blocks.push_back(indices_to_json(b));
  j["blocks"] = std::move(blocks);
  j["tail"] = indices_to_json(p.tail());
  return j;
}

GoodPartition partition_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("partition: expected a JSON object");
  if (!j.contains("blocks") || !j["blocks"].is_array() || j["blocks"].size() != 3)
    throw ParseError("partition: expected exactly three blocks");
  std::array<std::vector<int>, 3> blocks;
  for (int b = 0; b < 3; ++b)
    blocks[b] = indices_from_json(j["blocks"][b], "partition block");
  std::vector<int> tail;
  if (j.contains("tail")) tail = indices_from_json(j["tail"], "partition tail");
  GoodPartition p(std::move(blocks), std::move(tail));
  if (j.contains("s")) {
    if (!j["s"].is_number_integer() || j["s"].get<int>() != p.s())
      throw ParseError("partition: field 's' disagrees with the block size");
  }
  return p;
}

json census_to_json(const StrataCensus& c) {
  json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["hyperplanes"] = c.hyperplanes;
  json census = json::object();
  for (const auto& [mult, count] : c.census)
    census[std::to_string(mult)] = count;
  j["census"] = std::move(census);
  json triples = json::array();
  for (const auto& t : c.multiplicity3_triples) {
    json triple = json::array();
    for (const auto& L : t) triple.push_back(indices_to_json(L));
    triples.push_back(std::move(triple));
  }
  j["dependent_triples"] = std::move(triples);
  return j;
}

json quadric_scan_to_json(const QuadricScan& q) {
  json j;
  json entries = json::array();
  for (const QuadricEntry& e : q.entries) {
    json entry;
    entry["support"] = indices_to_json(e.support);
    json pairing = json::array();
    for (const auto& pair : e.pairing)
      pairing.push_back(json::array({pair[0] + 1, pair[1] + 1}));
    entry["pairing"] = std::move(pairing);
    entry["value"] = e.value.str();
    entry["vanishes"] = e.vanishes;
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  j["summary"] = json{{"checked", q.checked}, {"vanishing", q.vanishing}};
  return j;
}

json plucker_to_json(const PluckerTable& t) {
  json j;
  j["n"] = t.n;
  j["k"] = t.k;
  j["all_nonzero"] = t.all_nonzero;
  json values = json::object();
  for (const auto& [subset, value] : t.values) {
    std::string key;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i) key += ',';
      key += std::to_string(subset[i] + 1);
    }
    values[key] = value.str();
  }
  j["values"] = std::move(values);
  return j;
}

json genericity_to_json(const GenericityReport& r) {
  json j;
  j["generic"] = r.generic;
  if (!r.generic) j["witness"] = indices_to_json(r.witness);
  return j;
}

}  // namespace hyperarr
