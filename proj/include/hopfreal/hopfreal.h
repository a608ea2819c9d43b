#ifndef HOPFREAL_H
#define HOPFREAL_H

/* C interface to the realization engine. Handles are opaque; every call
 * that can fail returns an hr_status and leaves a message for
 * hr_last_error() (per thread). Strings returned by the library stay valid
 * until the owning handle is freed. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HR_API __declspec(dllexport)
#else
#define HR_API __attribute__((visibility("default")))
#endif

typedef enum hr_status {
  HR_OK = 0,
  HR_ERR_PARSE = 1,      /* malformed input; message carries line and column */
  HR_ERR_RESOLUTION = 2, /* unknown algebra or coalgebra name */
  HR_ERR_VALIDATION = 3, /* input violates an invariant; message lists all */
  HR_ERR_ARGUMENT = 4,   /* bad argument to this API (null handle, unknown stage) */
  HR_ERR_IO = 5,         /* file could not be read or written */
  HR_ERR_INTERNAL = 6    /* anything else; indicates a bug */
} hr_status;

typedef struct hr_document hr_document;
typedef struct hr_report hr_report;

HR_API const char* hr_version(void);
HR_API const char* hr_last_error(void);

HR_API hr_status hr_document_parse(const char* text, size_t length, hr_document** out);
HR_API hr_status hr_document_load(const char* path, hr_document** out);
HR_API void hr_document_free(hr_document* doc);
/* name: "truncation", "max_degree" or "max_stages"; value >= 1. */
HR_API hr_status hr_document_set_param(hr_document* doc, const char* name, long value);

/* stages: comma-separated stage names, or "all". */
HR_API hr_status hr_run(const hr_document* doc, const char* stages, hr_report** out);
HR_API const char* hr_report_text(const hr_report* report);
HR_API const char* hr_report_yaml(const hr_report* report);
HR_API hr_status hr_report_emit(const hr_report* report, const char* path);
/* 0 when every executed stage passed, 1 otherwise. */
HR_API int hr_report_exit_code(const hr_report* report);
HR_API void hr_report_free(hr_report* report);

#ifdef __cplusplus
}
#endif

#endif
