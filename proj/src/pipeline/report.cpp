#include "pipeline/report.hpp"

#include <algorithm>
#include <json.hpp>

#include "common.hpp"

namespace a2ck::pipeline {

using nlohmann::json;

void VerificationReport::add(CheckResult c) {
  if (has(c.name))
    throw Error(Errc::internal, "duplicate check record: " + c.name);
  checks.push_back(std::move(c));
}

bool VerificationReport::has(const std::string& name) const {
  return std::any_of(checks.begin(), checks.end(),
                     [&](const CheckResult& c) { return c.name == name; });
}

int VerificationReport::num_failed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::fail;
  }));
}

int VerificationReport::num_inconclusive() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::inconclusive;
  }));
}

int VerificationReport::exit_code() const {
  if (incomplete) return 2;
  if (num_failed() > 0) return 1;
  if (num_inconclusive() > 0) return 3;
  return 0;
}

std::string VerificationReport::to_json(bool include_timing) const {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["config_fingerprint"] = config_fingerprint;
  j["datum"] = datum_name;
  j["q"] = q;
  j["incomplete"] = incomplete;
  if (incomplete) j["abort_reason"] = abort_reason;
  j["checks"] = json::array();
  for (const auto& c : checks) {
    json cj;
    cj["name"] = c.name;
    cj["anchor"] = c.anchor;
    cj["status"] = to_string(c.status);
    cj["expected"] = c.expected;
    cj["observed"] = c.observed;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    j["checks"].push_back(std::move(cj));
  }
  j["summary"] = {{"total", checks.size()},
                  {"failed", num_failed()},
                  {"inconclusive", num_inconclusive()},
                  {"exit_code", exit_code()}};
  if (include_timing) {
    json t = json::object();
    for (const auto& [k, v] : timing_seconds) t[k] = v;
    j["timing"] = std::move(t);
  }
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_markdown() const {
  std::string md;
  md += "# Verification report: " + datum_name + " (q = " + std::to_string(q) + ")\n\n";
  if (incomplete) md += "**Incomplete run**: " + abort_reason + "\n\n";
  md += "Summary: " + std::to_string(checks.size()) + " checks, " +
        std::to_string(num_failed()) + " failed, " + std::to_string(num_inconclusive()) +
        " inconclusive.\n";

  // stable anchor groups, in first-appearance order
  std::vector<std::string> anchors;
  for (const auto& c : checks)
    if (std::find(anchors.begin(), anchors.end(), c.anchor) == anchors.end())
      anchors.push_back(c.anchor);
  for (const auto& a : anchors) {
    md += "\n## " + a + "\n\n";
    md += "| check | status | expected | observed |\n";
    md += "|---|---|---|---|\n";
    for (const auto& c : checks) {
      if (c.anchor != a) continue;
      md += "| " + c.name + " | " + to_string(c.status) + " | " + c.expected + " | " +
            c.observed + " |\n";
    }
  }
  return md;
}

std::string VerificationReport::emit(const std::string& format) const {
  if (format == "json") return to_json();
  if (format == "markdown") return to_markdown();
  throw Error(Errc::invalid_argument, "unknown report format: " + format);
}

}  // namespace a2ck::pipeline
