#ifndef PAIREDKERNEL_H
#define PAIREDKERNEL_H

/* C interface of the paired-kernel engine. All payloads are JSON text; see
 * README.md for the symbol and report schemas. Reports are owned by the
 * returned handle and freed with pk_report_free. Calls are thread-safe; the
 * error message is thread-local. */

#ifndef PK_API
#if defined(_WIN32)
#define PK_API __declspec(dllexport)
#else
#define PK_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pk_status {
  PK_OK = 0,
  PK_ERR_PARSE = 1,         /* malformed JSON or schema violation */
  PK_ERR_PRECONDITION = 2,  /* degenerate pair, unmet precondition, unsupported symbol */
  PK_ERR_VERIFY = 3,        /* engine and numerical verifier disagree */
  PK_ERR_INTERNAL = 4
} pk_status;

typedef struct pk_report pk_report; /* opaque */

/* config_json may be NULL or empty for defaults:
 * {"grid":4096,"cutoff":128,"buffer":64,"rank_tol":1e-7,"residual_tol":1e-6,
 *  "alpha_check":false,"seed":12345} */

PK_API pk_status pk_kernel(const char* pair_json, const char* config_json, pk_report** out);
PK_API pk_status pk_minimal(const char* request_json, const char* config_json, pk_report** out);
PK_API pk_status pk_atto(const char* spec_json, const char* config_json, pk_report** out);
PK_API pk_status pk_verify(const char* request_json, const char* config_json, pk_report** out);
PK_API pk_status pk_decompose(const char* pair_json, int k, const char* config_json,
                              pk_report** out);

/* NUL-terminated report text; valid until pk_report_free. */
PK_API const char* pk_report_json(const pk_report* report);
PK_API void pk_report_free(pk_report* report);

/* Message of the last failed call on this thread; empty string if none. */
PK_API const char* pk_last_error(void);

PK_API const char* pk_version(void);

#ifdef __cplusplus
}
#endif

#endif /* PAIREDKERNEL_H */
