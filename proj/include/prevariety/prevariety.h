#ifndef PREVARIETY_PREVARIETY_H
#define PREVARIETY_PREVARIETY_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PV_API __declspec(dllexport)
#else
#define PV_API __attribute__((visibility("default")))
#endif

typedef enum pv_status {
    PV_OK = 0,
    PV_ERR_INVALID_ARGUMENT = 1,
    PV_ERR_PARSE = 2,
    PV_ERR_DEGENERATE = 3,
    PV_ERR_IO = 4,
    PV_ERR_BUFFER_TOO_SMALL = 5,
    PV_ERR_OVERFLOW = 6,
    PV_ERR_INTERNAL = 7
} pv_status;

typedef enum pv_algorithm { PV_STATIC = 0, PV_DYNAMIC = 1 } pv_algorithm;

typedef struct pv_system pv_system;
typedef struct pv_result pv_result;

typedef struct pv_config {
    pv_algorithm algorithm;
    int iterative;          /* nonzero: work-stealing traversal */
    int tables;             /* nonzero: relation-table pruning */
    unsigned workers;
    uint64_t seed;
    int want_rays;
    int want_maximal;
    const char* trace_path; /* NULL: no trace */
} pv_config;

typedef struct pv_stats {
    uint64_t intersections_attempted;
    uint64_t intersections_nonempty;
    uint64_t pruned_by_table;
    uint64_t output_cones;
    uint64_t tasks_executed;
    uint64_t table_pair_tests;
    uint64_t table_bits_written;
} pv_stats;

PV_API const char* pv_version(void);

/* Message of the last failure on the calling thread; empty when none. */
PV_API const char* pv_last_error(void);

/* Dynamic, iterative, tables on, one worker, seed 0, rays on. */
PV_API void pv_config_init(pv_config* config);

/* family: "cyclic", "nbody", "nvortex" or "minors" (n ignored). */
PV_API pv_status pv_system_generate(const char* family, int n, pv_system** out);
PV_API pv_status pv_system_parse(const char* text, pv_system** out);
PV_API pv_status pv_system_load(const char* path, pv_system** out);
PV_API void pv_system_free(pv_system* sys);

PV_API size_t pv_system_dim(const pv_system* sys);
PV_API size_t pv_system_polynomial_count(const pv_system* sys);
PV_API size_t pv_system_support_size(const pv_system* sys, size_t polynomial);
/* Text in the input format; see pv_result_serialize for the buffer protocol. */
PV_API pv_status pv_system_format(const pv_system* sys, char* buf, size_t cap, size_t* needed);

PV_API pv_status pv_run(const pv_system* sys, const pv_config* config, pv_result** out);
PV_API void pv_result_free(pv_result* result);

PV_API size_t pv_result_dim(const pv_result* result);
PV_API size_t pv_result_cone_count(const pv_result* result);
PV_API size_t pv_result_ray_count(const pv_result* result);
/* Writes pv_result_dim() entries; PV_ERR_OVERFLOW if one does not fit. */
PV_API pv_status pv_result_ray(const pv_result* result, size_t index, int64_t* out);
PV_API pv_status pv_result_stats(const pv_result* result, pv_stats* out);

/* Number of (dimension, count) entries; zero unless maximal cones were requested. */
PV_API size_t pv_result_maximal_size(const pv_result* result);
PV_API pv_status pv_result_maximal_entry(const pv_result* result, size_t index, int* dim,
                                         size_t* count);

/* Canonical text. *needed receives the size including the terminating NUL;
   returns PV_ERR_BUFFER_TOO_SMALL when cap is smaller. buf may be NULL when cap is 0. */
PV_API pv_status pv_result_serialize(const pv_result* result, char* buf, size_t cap,
                                     size_t* needed);
PV_API pv_status pv_result_write(const pv_result* result, const char* path);

#ifdef __cplusplus
}
#endif

#endif
