#pragma once

#include <optional>
#include <string>

#include "common.hpp"

namespace a2ck::pipeline {

struct PipelineConfig {
  // Exactly one datum source: a preset name, a file path, or an inline
  // datum object (kept as its JSON text).
  std::string preset;
  std::string datum_file;
  std::string datum_inline;

  int radius = 12;
  int h3_window = 2;
  int h3_shape_cap = 3;
  std::string out_dir = "out";
  bool cache = true;
  int workers = 0;  // 0 = hardware default
  int kb_max_rules = 4000;
  int kb_max_overlap = 20;

  // Parse + validate (radius >= 10 is required before tile matrices can be
  // built; that is enforced at the matrices stage, not here).
  static PipelineConfig from_json(const std::string& text);
  std::string to_json() const;

  // Resolved datum document text.
  std::string datum_json() const;
};

}  // namespace a2ck::pipeline
