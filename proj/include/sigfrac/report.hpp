#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sigfrac {

/// One verified instance: its inputs, every computed value, and a verdict.
struct ReportCase {
  std::string name;
  std::vector<std::pair<std::string, std::string>> fields;
  bool pass = false;

  ReportCase& add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

struct Report {
  std::string suite;
  std::vector<ReportCase> cases;

  std::size_t passed() const {
    std::size_t k = 0;
    for (const auto& c : cases) k += c.pass ? 1 : 0;
    return k;
  }
  bool all_pass() const { return passed() == cases.size(); }
};

inline std::string to_text(const ReportCase& c) {
  std::string out = "case: " + c.name + "\n";
  for (const auto& [k, v] : c.fields) out += "  " + k + ": " + v + "\n";
  out += std::string("  verdict: ") + (c.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

/// "case:" blocks followed by "PASS k/k" or "FAIL j/k".
inline std::string to_text(const Report& r) {
  std::string out;
  for (const auto& c : r.cases) out += to_text(c);
  out += (r.all_pass() ? "PASS " : "FAIL ") + std::to_string(r.passed()) + "/" +
         std::to_string(r.cases.size()) + "\n";
  return out;
}

}  // namespace sigfrac
