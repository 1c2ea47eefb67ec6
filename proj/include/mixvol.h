/* C interface to the mixvol library: exact mixed volumes of lattice
 * polytopes, suture systems of semi-interlaced families, and the derived
 * algebraic-degree computations.
 *
 * Jobs are JSON documents (see README.md for the schema). Parse once with
 * mixvol_job_parse, then run any number of commands against the handle.
 * Handles are immutable after creation and safe to share across threads.
 */

#ifndef MIXVOL_H
#define MIXVOL_H

#ifdef __cplusplus
extern "C" {
#endif

#ifndef MIXVOL_API
#if defined(_WIN32)
#define MIXVOL_API __declspec(dllexport)
#else
#define MIXVOL_API __attribute__((visibility("default")))
#endif
#endif

typedef enum mixvol_status {
    MIXVOL_OK = 0,
    MIXVOL_CHECK_FAILED = 1,  /* a verified property does not hold (not semi-interlaced, route mismatch, ...) */
    MIXVOL_INVALID_INPUT = 2, /* schema violation or a broken precondition */
    MIXVOL_INTERNAL_ERROR = 3
} mixvol_status;

enum {
    MIXVOL_FLAG_ORACLE = 1u << 0, /* force the polarization (inclusion-exclusion) route */
    MIXVOL_FLAG_CHECK = 1u << 1   /* run both routes and fail on mismatch */
};

typedef struct mixvol_job mixvol_job;
typedef struct mixvol_result mixvol_result;

MIXVOL_API const char *mixvol_version(void);

/* Space-separated list of the supported commands. */
MIXVOL_API const char *mixvol_commands(void);

/* Parses and retains a job document. On failure returns a status other than
 * MIXVOL_OK and, if out_error is non-null, a message to release with
 * mixvol_string_free. */
MIXVOL_API mixvol_status mixvol_job_parse(const char *json_text, mixvol_job **out_job, char **out_error);
MIXVOL_API void mixvol_job_free(mixvol_job *job);

/* Runs one command over a parsed job. On success *out_result owns the
 * rendered documents until mixvol_result_free. */
MIXVOL_API mixvol_status mixvol_run(const mixvol_job *job, const char *command, unsigned flags,
                                    mixvol_result **out_result, char **out_error);

MIXVOL_API const char *mixvol_result_json(const mixvol_result *result);
MIXVOL_API const char *mixvol_result_text(const mixvol_result *result);
MIXVOL_API void mixvol_result_free(mixvol_result *result);

MIXVOL_API void mixvol_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* MIXVOL_H */
