#include "a2ck.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "common.hpp"
#include "group/datum.hpp"
#include "ktheory/minors_oracle.hpp"
#include "pipeline/pipeline.hpp"
#include "version.hpp"

struct a2ck_session {
  a2ck::pipeline::Pipeline pipe;
  explicit a2ck_session(a2ck::pipeline::PipelineConfig cfg) : pipe(std::move(cfg)) {}
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

a2ck_status to_status(const a2ck::Error& e) {
  using a2ck::Errc;
  switch (e.code()) {
    case Errc::parse:
      return A2CK_ERR_CONFIG;
    case Errc::invalid_argument:
      return A2CK_ERR_INVALID_ARG;
    case Errc::io:
      return A2CK_ERR_IO;
    default:
      return A2CK_ERR_INTERNAL;
  }
}

template <typename F>
a2ck_status guarded(F&& f) {
  try {
    f();
    return A2CK_OK;
  } catch (const a2ck::Error& e) {
    g_last_error = e.what();
    return to_status(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return A2CK_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* a2ck_version(void) { return a2ck::kVersion; }

const char* a2ck_last_error(void) { return g_last_error.c_str(); }

a2ck_status a2ck_preset_config(const char* name, char** json_out) {
  if (!name || !json_out) {
    g_last_error = "null argument";
    return A2CK_ERR_INVALID_ARG;
  }
  return guarded([&] { *json_out = dup_string(a2ck::group::preset_json(name)); });
}

a2ck_status a2ck_session_create(const char* config_json, a2ck_session** out) {
  if (!config_json || !out) {
    g_last_error = "null argument";
    return A2CK_ERR_INVALID_ARG;
  }
  *out = nullptr;
  const a2ck_status st = guarded([&] {
    auto cfg = a2ck::pipeline::PipelineConfig::from_json(config_json);
    *out = new a2ck_session(std::move(cfg));
  });
  // any rejection of the document counts as a config error here
  return st == A2CK_ERR_INVALID_ARG ? A2CK_ERR_CONFIG : st;
}

void a2ck_session_destroy(a2ck_session* s) { delete s; }

a2ck_status a2ck_session_run(a2ck_session* s, const char* stage) {
  if (!s || !stage) {
    g_last_error = "null argument";
    return A2CK_ERR_INVALID_ARG;
  }
  return guarded([&] { s->pipe.run(stage); });
}

a2ck_status a2ck_session_report(a2ck_session* s, const char* format, char** out) {
  if (!s || !format || !out) {
    g_last_error = "null argument";
    return A2CK_ERR_INVALID_ARG;
  }
  return guarded([&] { *out = dup_string(s->pipe.report().emit(format)); });
}

a2ck_status a2ck_session_export(a2ck_session* s) {
  if (!s) {
    g_last_error = "null argument";
    return A2CK_ERR_INVALID_ARG;
  }
  return guarded([&] { s->pipe.export_artifacts(); });
}

int a2ck_session_exit_code(const a2ck_session* s) {
  return s ? s->pipe.report().exit_code() : 2;
}

a2ck_status a2ck_snf_oracle(int count, unsigned long long seed, char** summary_out) {
  if (!summary_out || count <= 0) {
    g_last_error = "bad arguments";
    return A2CK_ERR_INVALID_ARG;
  }
  return guarded(
      [&] { *summary_out = dup_string(a2ck::ktheory::snf_minors_crosscheck(count, seed)); });
}

void a2ck_string_free(char* s) { std::free(s); }

}  // extern "C"
