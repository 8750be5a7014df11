#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace koch {

struct Check {
  std::string name;
  int s = 0;
  bool pass = false;
  std::string detail;
};

/// Named pass/fail record. Failures are data; nothing here throws.
struct VerificationReport {
  std::vector<Check> checks;
  std::vector<std::string> notes;

  void add(std::string name, int s, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), s, pass, std::move(detail)});
  }

  void append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.pass; });
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  std::vector<const Check*> failures() const {
    std::vector<const Check*> out;
    for (const auto& c : checks) {
      if (!c.pass) out.push_back(&c);
    }
    return out;
  }
};

}  // namespace koch
