#pragma once

#include <string>
#include <vector>

namespace a2ck {

enum class CheckStatus { pass, fail, inconclusive };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "inconclusive";
  }
}

// One verification record. `anchor` names the mathematical fact being
// checked (a formula, not prose) and groups related checks in the report.
struct CheckResult {
  std::string name;
  std::string anchor;
  CheckStatus status = CheckStatus::fail;
  std::string expected;
  std::string observed;
  std::string detail;  // counterexample / witness payload on demand

  static CheckResult make(std::string name, std::string anchor, bool ok, std::string expected,
                          std::string observed, std::string detail = {}) {
    return CheckResult{std::move(name), std::move(anchor),
                       ok ? CheckStatus::pass : CheckStatus::fail, std::move(expected),
                       std::move(observed), std::move(detail)};
  }
};

}  // namespace a2ck
