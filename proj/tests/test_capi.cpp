// Exercises the shared-library C interface end to end (no doctest: this
// binary is also a smoke test that the header compiles as plain C-style API).
#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#include "a2ck.h"

#define REQUIRE(cond)                                                       \
  do {                                                                      \
    if (!(cond)) {                                                          \
      std::fprintf(stderr, "FAILED %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                                             \
    }                                                                       \
  } while (0)

int main() {
  REQUIRE(std::strlen(a2ck_version()) > 0);

  char* preset = nullptr;
  REQUIRE(a2ck_preset_config("paper-q2", &preset) == A2CK_OK);
  REQUIRE(std::strstr(preset, "\"q\": 2") || std::strstr(preset, "\"q\":2"));
  a2ck_string_free(preset);
  REQUIRE(a2ck_preset_config("nope", &preset) != A2CK_OK);
  REQUIRE(std::strlen(a2ck_last_error()) > 0);

  // bad config documents
  a2ck_session* s = nullptr;
  REQUIRE(a2ck_session_create("not json", &s) == A2CK_ERR_CONFIG);
  REQUIRE(s == nullptr);
  REQUIRE(a2ck_session_create("{\"datum\":{\"preset\":\"paper-q2\"},\"radius\":0}", &s) ==
          A2CK_ERR_CONFIG);

  // a real run at reduced radius (fast), through the full stage chain
  const char* cfg =
      "{\"datum\":{\"preset\":\"paper-q2\"},\"radius\":11,\"cache\":false,"
      "\"out_dir\":\"capi-test-out\"}";
  REQUIRE(a2ck_session_create(cfg, &s) == A2CK_OK);
  REQUIRE(s != nullptr);
  REQUIRE(a2ck_session_run(s, "frobnicate") == A2CK_ERR_INVALID_ARG);
  REQUIRE(a2ck_session_run(s, "all") == A2CK_OK);
  REQUIRE(a2ck_session_exit_code(s) == 0);

  char* json = nullptr;
  REQUIRE(a2ck_session_report(s, "json", &json) == A2CK_OK);
  REQUIRE(std::strstr(json, "\"checks\""));
  REQUIRE(std::strstr(json, "cgamma-hexagon"));
  a2ck_string_free(json);

  char* md = nullptr;
  REQUIRE(a2ck_session_report(s, "markdown", &md) == A2CK_OK);
  REQUIRE(std::strstr(md, "# Verification report"));
  a2ck_string_free(md);

  char* bad = nullptr;
  REQUIRE(a2ck_session_report(s, "yaml", &bad) != A2CK_OK);

  REQUIRE(a2ck_session_export(s) == A2CK_OK);
  a2ck_session_destroy(s);

  char* summary = nullptr;
  REQUIRE(a2ck_snf_oracle(50, 7, &summary) == A2CK_OK);
  REQUIRE(std::strstr(summary, "exact agreement"));
  a2ck_string_free(summary);

  std::puts("capi: all assertions passed");
  return 0;
}
