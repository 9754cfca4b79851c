#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace homext {

struct LawCheck {
  std::string law;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

/// Outcome of an exhaustive law verification: one entry per law, holding the
/// first counterexample found.
class LawReport {
 public:
  /// Records a check. Repeated calls for the same law keep the first failure.
  void record(const std::string& law, bool ok, const std::string& counterexample = {}) {
    for (auto& c : checks_) {
      if (c.law != law) continue;
      if (c.passed && !ok) {
        c.passed = false;
        c.counterexample = counterexample;
      }
      return;
    }
    checks_.push_back({law, ok, ok ? std::string{} : counterexample});
  }

  /// Like record, but only builds the counterexample text on failure.
  template <class Describe>
  void check(const std::string& law, bool ok, Describe&& describe) {
    if (ok)
      record(law, true);
    else
      record(law, false, describe());
  }

  void merge(const LawReport& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks_) record(prefix + c.law, c.passed, c.counterexample);
  }

  const std::vector<LawCheck>& checks() const { return checks_; }

  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const LawCheck& c) { return c.passed; });
  }

  const LawCheck* find(const std::string& law) const {
    for (const auto& c : checks_)
      if (c.law == law) return &c;
    return nullptr;
  }

  bool passed(const std::string& law) const {
    const LawCheck* c = find(law);
    return c != nullptr && c->passed;
  }

 private:
  std::vector<LawCheck> checks_;
};

}  // namespace homext
