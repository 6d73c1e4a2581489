#include "avmod/format.hpp"

namespace avmod::format {

std::string monomial(const MultiIndex& k, char var) {
  std::string out;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    if (k[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var;
    out += std::to_string(i + 1);
    if (k[i] > 1) out += '^' + std::to_string(k[i]);
  }
  return out;
}

std::string scaled(const Rational& c, const std::string& body) {
  if (body.empty()) return to_string(c);
  if (c == 1) return body;
  if (c == -1) return "-" + body;
  return to_string(c) + "*" + body;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const std::string& t = terms[i];
    if (!t.empty() && t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

std::string product(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

}  // namespace avmod::format
