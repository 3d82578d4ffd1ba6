/* a2ck - boundary-algebra verification toolkit for triangle buildings.
 *
 * C interface to the shared library. All objects are opaque handles; all
 * functions return a status code and report details through out-parameters.
 * Strings returned through char** are heap-allocated and must be released
 * with a2ck_string_free(). Handles are not thread-safe; use one per thread.
 */
#ifndef A2CK_H
#define A2CK_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum a2ck_status {
  A2CK_OK = 0,
  A2CK_ERR_INVALID_ARG = 1, /* bad parameter, unknown stage/format/preset */
  A2CK_ERR_CONFIG = 2,      /* config or datum document rejected */
  A2CK_ERR_IO = 3,
  A2CK_ERR_INTERNAL = 4,
} a2ck_status;

/* A session owns one pipeline run: a parsed config, the stage products and
 * the accumulated verification report. */
typedef struct a2ck_session a2ck_session;

const char* a2ck_version(void);

/* Last error message of the calling thread (set whenever a call fails). */
const char* a2ck_last_error(void);

/* JSON text of a built-in group datum preset ("paper-q2"). */
a2ck_status a2ck_preset_config(const char* name, char** json_out);

/* Creates a session from a pipeline config document (JSON). */
a2ck_status a2ck_session_create(const char* config_json, a2ck_session** out);
void a2ck_session_destroy(a2ck_session* s);

/* Runs the pipeline through the given stage: "build", "matrices", "verify",
 * "ktheory", "report" or "all". Stages are cumulative; rerunning a finished
 * stage is a no-op. Check failures do not fail this call; they are recorded
 * in the report and reflected in a2ck_session_exit_code(). */
a2ck_status a2ck_session_run(a2ck_session* s, const char* stage);

/* Verification report in the requested format ("json" or "markdown"). */
a2ck_status a2ck_session_report(a2ck_session* s, const char* format, char** out);

/* Writes alphabet/matrix exports and the report files into the configured
 * output directory. */
a2ck_status a2ck_session_export(a2ck_session* s);

/* 0 = all checks pass, 1 = some check failed, 2 = run aborted/incomplete,
 * 3 = inconclusive checks only. */
int a2ck_session_exit_code(const a2ck_session* s);

/* Standalone determinant-divisor oracle for the Smith normal form: `count`
 * random integer matrices compared exactly; summary text on success. */
a2ck_status a2ck_snf_oracle(int count, unsigned long long seed, char** summary_out);

void a2ck_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* A2CK_H */
