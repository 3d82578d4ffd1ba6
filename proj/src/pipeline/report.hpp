#pragma once

#include <map>
#include <string>
#include <vector>

#include "checks.hpp"

namespace a2ck::pipeline {

// Machine- and human-readable verification report. The JSON body is
// deterministic for a given config and dataset; timing lives in a separate
// section that byte-level comparisons exclude.
struct VerificationReport {
  static constexpr int kSchemaVersion = 1;

  std::string config_fingerprint;  // hash of (datum, radius, code version)
  std::string datum_name;
  int q = 0;
  bool incomplete = false;  // a stage hard-failed; later checks are missing
  std::string abort_reason;
  std::vector<CheckResult> checks;
  std::map<std::string, double> timing_seconds;

  void add(CheckResult c);
  bool has(const std::string& name) const;

  int num_failed() const;
  int num_inconclusive() const;
  // 0 all pass; 3 inconclusive only; 1 any failure; 2 aborted.
  int exit_code() const;

  std::string to_json(bool include_timing = true) const;
  std::string to_markdown() const;  // grouped by anchor; no timing
  // "json" or "markdown"; anything else is an error.
  std::string emit(const std::string& format) const;
};

}  // namespace a2ck::pipeline
