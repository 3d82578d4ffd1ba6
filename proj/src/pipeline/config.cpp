#include "pipeline/config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "group/datum.hpp"

namespace a2ck::pipeline {

using nlohmann::json;

PipelineConfig PipelineConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::parse, std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw Error(Errc::parse, "config: expected a JSON object");
  PipelineConfig c;
  int sources = 0;
  if (j.contains("datum")) {
    const auto& d = j["datum"];
    if (d.is_object() && d.contains("preset")) {
      c.preset = d["preset"].get<std::string>();
      ++sources;
    }
    if (d.is_object() && d.contains("file")) {
      c.datum_file = d["file"].get<std::string>();
      ++sources;
    }
    if (d.is_object() && d.contains("inline")) {
      c.datum_inline = d["inline"].dump();
      ++sources;
    }
  }
  if (sources != 1)
    throw Error(Errc::invalid_argument,
                "config: datum must name exactly one of preset/file/inline");
  c.radius = j.value("radius", c.radius);
  if (c.radius <= 0) throw Error(Errc::invalid_argument, "config: radius must be positive");
  c.h3_window = j.value("h3_window", c.h3_window);
  c.h3_shape_cap = j.value("h3_shape_cap", c.h3_shape_cap);
  if (c.h3_window < 1 || c.h3_shape_cap < c.h3_window)
    throw Error(Errc::invalid_argument, "config: need h3_shape_cap >= h3_window >= 1");
  c.out_dir = j.value("out_dir", c.out_dir);
  c.cache = j.value("cache", c.cache);
  c.workers = j.value("workers", c.workers);
  if (c.workers < 0) throw Error(Errc::invalid_argument, "config: workers must be >= 0");
  c.kb_max_rules = j.value("kb_max_rules", c.kb_max_rules);
  c.kb_max_overlap = j.value("kb_max_overlap", c.kb_max_overlap);
  return c;
}

std::string PipelineConfig::to_json() const {
  json j;
  if (!preset.empty()) j["datum"]["preset"] = preset;
  if (!datum_file.empty()) j["datum"]["file"] = datum_file;
  if (!datum_inline.empty()) j["datum"]["inline"] = json::parse(datum_inline);
  j["radius"] = radius;
  j["h3_window"] = h3_window;
  j["h3_shape_cap"] = h3_shape_cap;
  j["out_dir"] = out_dir;
  j["cache"] = cache;
  j["workers"] = workers;
  j["kb_max_rules"] = kb_max_rules;
  j["kb_max_overlap"] = kb_max_overlap;
  return j.dump(2);
}

std::string PipelineConfig::datum_json() const {
  if (!preset.empty()) return group::preset_json(preset);
  if (!datum_inline.empty()) return datum_inline;
  std::ifstream in(datum_file);
  if (!in) throw Error(Errc::io, "cannot open datum file: " + datum_file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace a2ck::pipeline
