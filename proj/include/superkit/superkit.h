/* superkit C API: exact supercommutative algebra, verification suites and
 * model files behind opaque handles. All functions return sk_status; on
 * SK_ERROR the thread-local sk_last_error() carries the diagnostic.
 *
 * String-returning calls follow the buffer protocol: pass (buf, cap, &needed);
 * when cap is too small the call returns SK_BUFFER_TOO_SMALL and *needed holds
 * the required size including the terminating NUL.
 */
#ifndef SUPERKIT_H
#define SUPERKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SK_API __declspec(dllexport)
#else
#define SK_API __attribute__((visibility("default")))
#endif

typedef enum sk_status {
  SK_OK = 0,
  SK_ERROR = 1,
  SK_BUFFER_TOO_SMALL = 2,
  SK_INVALID_ARGUMENT = 3
} sk_status;

typedef enum sk_parity { SK_EVEN = 0, SK_ODD = 1 } sk_parity;

typedef enum sk_symbol_kind {
  SK_COORDINATE = 0,
  SK_PARAMETER = 1,
  SK_FUNCTION = 2
} sk_symbol_kind;

typedef struct sk_context sk_context;
typedef struct sk_expr sk_expr;
typedef struct sk_report sk_report;

SK_API const char* sk_version(void);
SK_API const char* sk_last_error(void);

/* ---------------------------------------------------- contexts and symbols */

SK_API sk_status sk_context_new(sk_context** out);
SK_API void sk_context_free(sk_context* ctx);

/* Function symbols list their (even) argument symbols by name. */
SK_API sk_status sk_declare(sk_context* ctx, const char* name,
                            sk_parity parity, sk_symbol_kind kind,
                            const char* const* args, size_t n_args);

/* ------------------------------------------------------------- expressions */

/* Expression syntax of the model DSL: rational arithmetic over declared
 * symbols, d/d(x) applications, D[...](...) Berezin integrals. */
SK_API sk_status sk_expr_parse(sk_context* ctx, const char* text,
                               sk_expr** out);
SK_API void sk_expr_free(sk_expr* e);

SK_API sk_status sk_expr_add(const sk_expr* a, const sk_expr* b,
                             sk_expr** out);
SK_API sk_status sk_expr_sub(const sk_expr* a, const sk_expr* b,
                             sk_expr** out);
SK_API sk_status sk_expr_mul(const sk_expr* a, const sk_expr* b,
                             sk_expr** out);
SK_API sk_status sk_expr_partial(const sk_expr* e, const char* symbol,
                                 sk_expr** out);
SK_API sk_status sk_expr_berezin(const sk_expr* e, const char* const* odd,
                                 size_t n_odd, sk_expr** out);
SK_API sk_status sk_expr_invert_even(const sk_expr* e, sk_expr** out);
SK_API sk_status sk_expr_equal(const sk_expr* a, const sk_expr* b, int* out);
SK_API sk_status sk_expr_is_zero(const sk_expr* e, int* out);
SK_API sk_status sk_expr_to_string(const sk_expr* e, char* buf, size_t cap,
                                   size_t* needed);

/* ------------------------------------------------- suites and model files */

/* Newline-separated list of built-in suite names (ending with "all"). */
SK_API sk_status sk_suite_list(char* buf, size_t cap, size_t* needed);

/* perturb != 0 turns the negative-control fixtures into direct assertions of
 * the perturbed claims, which then fail. */
SK_API sk_status sk_suite_run(const char* name, uint64_t seed, int perturb,
                              sk_report** out);
SK_API sk_status sk_model_run_file(const char* path, uint64_t seed,
                                   sk_report** out);
SK_API sk_status sk_model_run_text(const char* text, const char* name,
                                   uint64_t seed, sk_report** out);

/* ----------------------------------------------------------------- reports */

SK_API void sk_report_free(sk_report* r);
SK_API sk_status sk_report_counts(const sk_report* r, int* passed,
                                  int* failed);
/* format: "text" or "json"; JSON is deterministic with timings zeroed unless
 * with_timings is nonzero. */
SK_API sk_status sk_report_render(const sk_report* r, const char* format,
                                  int with_timings, char* buf, size_t cap,
                                  size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* SUPERKIT_H */
