/*
 * dvbp - C interface to the dynamic vector bin packing simulator.
 *
 * All objects are opaque handles created by the library and released with
 * the matching *_free function. Every fallible call returns a dvbp_status;
 * on failure dvbp_last_error() describes the problem (per thread, valid until
 * the next failing call on that thread).
 *
 * Exact rationals cross this boundary as canonical text: "p/q", or "p" when
 * the denominator is 1. Returned strings are owned by the handle they came
 * from and stay valid until it is freed.
 */
#ifndef DVBP_H
#define DVBP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DVBP_BUILDING_LIBRARY)
#    define DVBP_API __declspec(dllexport)
#  else
#    define DVBP_API __declspec(dllimport)
#  endif
#else
#  define DVBP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dvbp_status {
    DVBP_OK = 0,
    DVBP_ERR_USAGE = 1,        /* bad argument, unknown name, invalid model */
    DVBP_ERR_PARSE = 2,        /* malformed input text */
    DVBP_ERR_ORACLE_LIMIT = 3, /* exact solver refused the problem size */
    DVBP_ERR_OVERFLOW = 4,     /* exact arithmetic left the 128-bit range */
    DVBP_ERR_IO = 5,           /* file could not be read or written */
    DVBP_ERR_CONSTRAINT = 6,   /* adversarial parameters violate a constraint */
    DVBP_ERR_INTERNAL = 7
} dvbp_status;

typedef struct dvbp_instance dvbp_instance;
typedef struct dvbp_trace dvbp_trace;
typedef struct dvbp_audit dvbp_audit;
typedef struct dvbp_bounds dvbp_bounds;
typedef struct dvbp_adversarial dvbp_adversarial;

DVBP_API const char* dvbp_version(void);
DVBP_API const char* dvbp_last_error(void);
DVBP_API const char* dvbp_status_name(dvbp_status status);

/* ---- instances (CSV: id,arrival,departure,s1,...,sd) ---- */

DVBP_API dvbp_status dvbp_instance_parse(const char* csv_text, dvbp_instance** out);
DVBP_API dvbp_status dvbp_instance_read_file(const char* path, dvbp_instance** out);
DVBP_API dvbp_status dvbp_instance_write_file(const dvbp_instance* instance, const char* path);
/* Canonical CSV text, owned by the instance. */
DVBP_API const char* dvbp_instance_csv(const dvbp_instance* instance);
DVBP_API size_t dvbp_instance_item_count(const dvbp_instance* instance);
DVBP_API size_t dvbp_instance_dimension(const dvbp_instance* instance);
DVBP_API const char* dvbp_instance_span(const dvbp_instance* instance);
DVBP_API const char* dvbp_instance_mu(const dvbp_instance* instance);
DVBP_API void dvbp_instance_free(dvbp_instance* instance);

/* ---- simulation ---- */

/* policy: "mtf", "ff", "nf", "bf-max", "bf-sum", "wf", "lf" or "rf". */
DVBP_API dvbp_status dvbp_simulate(const dvbp_instance* instance, const char* policy, uint64_t seed,
                                   dvbp_trace** out);
DVBP_API const char* dvbp_trace_cost(const dvbp_trace* trace);
DVBP_API size_t dvbp_trace_bin_count(const dvbp_trace* trace);
DVBP_API const char* dvbp_trace_policy(const dvbp_trace* trace);
/* Bin holding the item, or 0 if the item is not in the trace. */
DVBP_API int64_t dvbp_trace_bin_of(const dvbp_trace* trace, int64_t item_id);
/* Trace text: "item_id,bin_id,arrival,departure" and "bin,bin_id,opened_at,closed_at" lines. */
DVBP_API const char* dvbp_trace_text(const dvbp_trace* trace);
DVBP_API dvbp_status dvbp_trace_write_file(const dvbp_trace* trace, const char* path);
DVBP_API dvbp_status dvbp_trace_parse(const char* text, dvbp_trace** out);
DVBP_API dvbp_status dvbp_trace_read_file(const char* path, dvbp_trace** out);
DVBP_API void dvbp_trace_free(dvbp_trace* trace);

/* ---- audit ---- */

DVBP_API dvbp_status dvbp_audit_run(const dvbp_instance* instance, const dvbp_trace* trace, dvbp_audit** out);
DVBP_API size_t dvbp_audit_violation_count(const dvbp_audit* audit);
/* "<kind>: <message>", or NULL when index is out of range. */
DVBP_API const char* dvbp_audit_violation(const dvbp_audit* audit, size_t index);
DVBP_API void dvbp_audit_free(dvbp_audit* audit);

/* ---- bounds ---- */

/* exact != 0 also runs the exact oracle; oracle_limit 0 means the default (16). */
DVBP_API dvbp_status dvbp_bounds_compute(const dvbp_instance* instance, int exact, size_t oracle_limit,
                                         dvbp_bounds** out);
DVBP_API const char* dvbp_bounds_lb_span(const dvbp_bounds* bounds);
DVBP_API const char* dvbp_bounds_lb_util(const dvbp_bounds* bounds);
DVBP_API const char* dvbp_bounds_lb_height(const dvbp_bounds* bounds);
/* Empty string when the oracle was not run. */
DVBP_API const char* dvbp_bounds_opt_exact(const dvbp_bounds* bounds);
/* key=value block. */
DVBP_API const char* dvbp_bounds_text(const dvbp_bounds* bounds);
DVBP_API const char* dvbp_bounds_csv_header(void);
/* Writes "instance_id,lb_span,lb_util,lb_height,opt_exact" into buf (NUL
 * terminated). *needed receives the full length without the NUL; the call
 * fails with DVBP_ERR_USAGE when capacity is too small. */
DVBP_API dvbp_status dvbp_bounds_csv_row(const dvbp_bounds* bounds, const char* instance_id, char* buf,
                                         size_t capacity, size_t* needed);
DVBP_API void dvbp_bounds_free(dvbp_bounds* bounds);

/* ---- adversarial constructions ---- */

typedef struct dvbp_adversarial_params {
    const char* family;        /* "anyfit", "nextfit" or "mtf" */
    int d;
    int k;                     /* n for "mtf" */
    const char* mu;            /* rational text, >= 1 */
    const char* epsilon;       /* NULL: family default */
    const char* epsilon_prime; /* NULL: family default */
} dvbp_adversarial_params;

/* On DVBP_ERR_CONSTRAINT, dvbp_last_error() lists each violated constraint
 * on its own line. */
DVBP_API dvbp_status dvbp_adversarial_generate(const dvbp_adversarial_params* params, dvbp_adversarial** out);
/* Borrowed; lives as long as the adversarial handle. */
DVBP_API const dvbp_instance* dvbp_adversarial_instance(const dvbp_adversarial* adv);
DVBP_API const char* dvbp_adversarial_epsilon(const dvbp_adversarial* adv);
DVBP_API const char* dvbp_adversarial_epsilon_prime(const dvbp_adversarial* adv);
DVBP_API const char* dvbp_adversarial_predicted_ratio(const dvbp_adversarial* adv);
/* Ratio the generated instance provably reaches; below predicted_ratio only
 * for "anyfit", by the d*k*eps' timing term. */
DVBP_API const char* dvbp_adversarial_guaranteed_ratio(const dvbp_adversarial* adv);
DVBP_API const char* dvbp_adversarial_opt_upper(const dvbp_adversarial* adv);
DVBP_API long long dvbp_adversarial_predicted_bins(const dvbp_adversarial* adv);
DVBP_API void dvbp_adversarial_free(dvbp_adversarial* adv);

/* ---- rational helpers ---- */

/* Writes a/b in canonical form into buf; same buffer contract as
 * dvbp_bounds_csv_row. */
DVBP_API dvbp_status dvbp_rational_div(const char* a, const char* b, char* buf, size_t capacity, size_t* needed);
/* Sets *result to -1, 0 or 1 as a <, ==, > b. */
DVBP_API dvbp_status dvbp_rational_compare(const char* a, const char* b, int* result);

/* ---- experiments ---- */

/* Runs the key=value config and writes results CSVs plus plotdata.csv into
 * out_dir. threads > 0 overrides the config. */
DVBP_API dvbp_status dvbp_experiment_run(const char* config_text, const char* out_dir, unsigned threads);

#ifdef __cplusplus
}
#endif

#endif /* DVBP_H */
