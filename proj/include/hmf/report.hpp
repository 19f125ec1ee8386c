#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hmf/json_io.hpp"

namespace hmf {

struct Check {
  std::string name;
  bool passed = false;
  std::string claim;
  std::vector<std::pair<std::string, std::string>> witness;

  Check& note(std::string key, std::string value) {
    witness.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

/// Outcome of a gallery example's claim suite, checks ordered by name.
struct VerdictReport {
  std::string id;
  std::map<std::string, long> params;
  std::vector<Check> checks;

  Check& add(std::string name, bool passed, std::string claim) {
    checks.push_back({std::move(name), passed, std::move(claim), {}});
    return checks.back();
  }

  void finalize() {
    std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  }

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline io::Json to_json(const VerdictReport& r) {
  io::Json out;
  out["id"] = r.id;
  io::Json params = io::Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  out["params"] = params;
  out["passed"] = r.passed();
  io::Json checks = io::Json::array();
  for (const auto& c : r.checks) {
    io::Json jc;
    jc["name"] = c.name;
    jc["status"] = c.passed ? "pass" : "fail";
    jc["claim"] = c.claim;
    io::Json w = io::Json::object();
    for (const auto& [k, v] : c.witness) w[k] = v;
    jc["witness"] = w;
    checks.push_back(jc);
  }
  out["checks"] = checks;
  return out;
}

inline std::string to_text(const VerdictReport& r) {
  std::ostringstream os;
  os << r.id;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  os << "  [" << (r.passed() ? "PASS" : "FAIL") << "]\n";
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  for (const auto& c : r.checks) {
    os << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.name << std::string(width - c.name.size() + 2, ' ') << c.claim
       << "\n";
    for (const auto& [k, v] : c.witness) os << "        " << k << " = " << v << "\n";
  }
  return os.str();
}

}  // namespace hmf
