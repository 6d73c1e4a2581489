#include "avmod/report.hpp"

#include <json.hpp>

#include <sstream>

namespace avmod {

namespace {

nlohmann::json write_matrix(const PolyMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.rank(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

bool VerificationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << report.title << "\n";
  if (!report.convention.empty()) os << "convention: " << report.convention << "\n";
  for (const auto& c : report.checks) {
    os << (c.passed() ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.checked << " checked";
    if (!c.passed()) os << ", " << c.failed << " failed";
    os << "\n";
    if (!c.passed()) {
      os << "  first counterexample: " << c.counterexample << "\n";
      if (c.residual) os << "  residual: " << to_string(*c.residual) << "\n";
    }
  }
  os << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string report_to_json(const VerificationReport& report) {
  using nlohmann::json;
  json doc;
  doc["title"] = report.title;
  if (!report.convention.empty()) doc["convention"] = report.convention;
  doc["passed"] = report.passed();
  doc["checks"] = json::array();
  for (const auto& c : report.checks) {
    json entry = {{"name", c.name}, {"passed", c.passed()}, {"checked", c.checked}, {"failed", c.failed}};
    if (!c.passed()) {
      entry["counterexample"] = c.counterexample;
      entry["residual"] = c.residual ? write_matrix(*c.residual) : json(nullptr);
    }
    doc["checks"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace avmod
