#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace cgt {

// One checked condition: name, outcome, and a witness or counterexample
// description. Non-mandatory records are informational (necessary conditions
// for properties beyond the report's subject) and do not affect the verdict.
struct CheckRecord {
  std::string name;
  bool pass = false;
  bool mandatory = true;
  std::string detail;
};

struct VerificationReport {
  std::string subject;
  std::vector<CheckRecord> checks;
  double wall_ms = 0.0;  // excluded from golden comparisons

  void add(std::string name, bool pass, std::string detail = "",
           bool mandatory = true) {
    checks.push_back(CheckRecord{std::move(name), pass, mandatory, std::move(detail)});
  }

  bool verdict() const {
    for (const CheckRecord &c : checks)
      if (c.mandatory && !c.pass) return false;
    return true;
  }

  const CheckRecord *find(const std::string &name) const {
    for (const CheckRecord &c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  nlohmann::ordered_json to_json(bool include_timing = false) const {
    nlohmann::ordered_json j;
    j["subject"] = subject;
    j["verdict"] = verdict() ? "PASS" : "FAIL";
    auto arr = nlohmann::ordered_json::array();
    for (const CheckRecord &c : checks) {
      nlohmann::ordered_json r;
      r["name"] = c.name;
      r["pass"] = c.pass;
      if (!c.mandatory) r["mandatory"] = false;
      if (!c.detail.empty()) r["detail"] = c.detail;
      arr.push_back(std::move(r));
    }
    j["checks"] = std::move(arr);
    if (include_timing) j["wall_ms"] = wall_ms;
    return j;
  }
};

}  // namespace cgt
