#include "avmod/gauge_io.hpp"

#include <json.hpp>

#include <initializer_list>
#include <set>

#include "avmod/errors.hpp"
#include "avmod/parse.hpp"

namespace avmod {

namespace {

using nlohmann::json;

void require_fields(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw SpecError(where + ": expected an object");
  const std::set<std::string> names(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!names.contains(key)) throw SpecError(where + ": unknown field '" + key + "'");
  }
  for (const auto& name : names) {
    if (!obj.contains(name)) throw SpecError(where + ": missing field '" + name + "'");
  }
}

long long read_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw SpecError(where + ": expected an integer");
  return v.get<long long>();
}

std::size_t read_positive(const json& v, const std::string& where) {
  const long long x = read_int(v, where);
  if (x < 1) throw SpecError(where + ": must be positive");
  return static_cast<std::size_t>(x);
}

PolyMatrix read_matrix(const json& v, std::size_t n, std::size_t rank, const std::string& where) {
  if (!v.is_array() || v.size() != rank) throw SpecError(where + ": expected " + std::to_string(rank) + " rows");
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t i = 0; i < rank; ++i) {
    const json& row = v[i];
    const std::string rw = where + " row " + std::to_string(i + 1);
    if (!row.is_array() || row.size() != rank) throw SpecError(rw + ": expected " + std::to_string(rank) + " entries");
    std::vector<Polynomial> entries;
    for (std::size_t j = 0; j < rank; ++j) {
      if (!row[j].is_string()) throw SpecError(rw + ": entries must be polynomial strings");
      try {
        entries.push_back(parse_polynomial(row[j].get<std::string>(), n));
      } catch (const ParseError& e) {
        throw SpecError(rw + " entry " + std::to_string(j + 1) + ": " + e.what());
      }
    }
    rows.push_back(std::move(entries));
  }
  return PolyMatrix::from_rows(rows);
}

json write_matrix(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.rank(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

GaugeModuleSpec gauge_spec_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("gauge spec: invalid JSON: ") + e.what());
  }
  require_fields(doc, {"n", "rank", "B", "rho"}, "gauge spec");
  GaugeModuleSpec spec;
  spec.n = read_positive(doc["n"], "gauge spec: n");
  spec.rank = read_positive(doc["rank"], "gauge spec: rank");
  const json& b = doc["B"];
  if (!b.is_array() || b.size() != spec.n) {
    throw SpecError("gauge spec: B must list " + std::to_string(spec.n) + " matrices");
  }
  for (std::size_t i = 0; i < spec.n; ++i) {
    spec.B.push_back(read_matrix(b[i], spec.n, spec.rank, "gauge spec: B_" + std::to_string(i + 1)));
  }
  const json& rho = doc["rho"];
  if (!rho.is_array()) throw SpecError("gauge spec: rho must be a list");
  for (std::size_t e = 0; e < rho.size(); ++e) {
    const std::string where = "gauge spec: rho entry " + std::to_string(e + 1);
    require_fields(rho[e], {"k", "p", "matrix"}, where);
    const json& k = rho[e]["k"];
    if (!k.is_array() || k.size() != spec.n) throw SpecError(where + ": k must list " + std::to_string(spec.n) + " exponents");
    std::vector<int> exps;
    for (const auto& x : k) {
      const long long v = read_int(x, where + ": k");
      if (v < 0 || v > 1000) throw SpecError(where + ": exponents must lie in 0..1000");
      exps.push_back(static_cast<int>(v));
    }
    const std::size_t p = read_positive(rho[e]["p"], where + ": p");
    if (p > spec.n) throw SpecError(where + ": p out of range");
    const VectorFieldGen g(MultiIndex(exps), p - 1);
    if (!g.in_lplus()) throw SpecError(where + ": " + gen_string(g) + " is not in L+ (|k| must be at least 1)");
    if (!spec.rho.emplace(g, read_matrix(rho[e]["matrix"], spec.n, spec.rank, where)).second) {
      throw SpecError(where + ": duplicate key " + gen_string(g));
    }
  }
  spec.validate();
  return spec;
}

std::string gauge_spec_to_json(const GaugeModuleSpec& spec) {
  json doc;
  doc["n"] = spec.n;
  doc["rank"] = spec.rank;
  doc["B"] = json::array();
  for (const auto& b : spec.B) doc["B"].push_back(write_matrix(b));
  doc["rho"] = json::array();
  for (const auto& [g, m] : spec.rho) {
    doc["rho"].push_back({{"k", std::vector<int>(g.k.exponents().begin(), g.k.exponents().end())}, {"p", g.dir + 1}, {"matrix", write_matrix(m)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace avmod
