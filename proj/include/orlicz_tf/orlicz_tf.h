#ifndef ORLICZ_TF_H
#define ORLICZ_TF_H

#include <stddef.h>
#include <stdint.h>

#if defined(OTF_BUILDING_LIBRARY)
#define OTF_API __attribute__((visibility("default")))
#else
#define OTF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum otf_status {
    OTF_OK = 0,
    OTF_ERR_INVALID_ARGUMENT = 1, /* bad request, unknown command, bad parameter */
    OTF_ERR_NUMERICAL = 2,        /* the command ran but some result record failed */
    OTF_ERR_NULL_POINTER = 3,
    OTF_ERR_INTERNAL = 4
} otf_status;

typedef struct otf_young otf_young;
typedef struct otf_field otf_field;

/* message of the last failed call on this thread; never NULL */
OTF_API const char* otf_last_error(void);
OTF_API const char* otf_version(void);

/* Young functions from JSON, e.g. {"kind":"power","params":{"p":3}} */
OTF_API otf_status otf_young_create(const char* spec_json, otf_young** out);
OTF_API void otf_young_destroy(otf_young* phi);
OTF_API otf_status otf_young_evaluate(const otf_young* phi, double t, double* out);
OTF_API otf_status otf_young_conjugate(const otf_young* phi, otf_young** out);
OTF_API otf_status otf_young_essential_inverse(const otf_young* phi, double s, double* out);
OTF_API otf_status otf_young_legendre(const otf_young* phi, double t, double* out);

/* sampled fields on a uniform grid (d axes of size N on [-L, L)) */
OTF_API otf_status otf_field_create(int d, double L, int N, const double* re, const double* im, otf_field** out);
OTF_API otf_status otf_field_generate(const char* signal_spec, int d, double L, int N, otf_field** out);
OTF_API void otf_field_destroy(otf_field* f);
OTF_API otf_status otf_field_size(const otf_field* f, size_t* out);
OTF_API otf_status otf_field_rank(const otf_field* f, int* out);
OTF_API otf_status otf_field_values(const otf_field* f, double* re, double* im);
OTF_API otf_status otf_field_l2_norm(const otf_field* f, double* out);
OTF_API otf_status otf_field_luxemburg_norm(const otf_field* f, const otf_young* phi, double* out);
/* STFT with the given window (NULL: gaussian(1)); the result lives on the phase grid */
OTF_API otf_status otf_field_stft(const otf_field* f, const otf_field* window, otf_field** out);
/* spec_json as for the modulation norm: {"phi":...,"psi":...,"flavor":"M"} */
OTF_API otf_status otf_field_modulation_norm(const otf_field* f, const char* spec_json, double* out);
OTF_API otf_status otf_field_entropy(const otf_field* f, const otf_field* window, double* out);

/* runs a JSON command request; *report_json receives a string owned by the caller (free with
   otf_string_free). OTF_ERR_NUMERICAL still fills the report. */
OTF_API otf_status otf_run_command(const char* request_json, char** report_json, char** table_csv);
OTF_API void otf_string_free(char* s);

/* worker threads for data-parallel loops; 0 restores the default */
OTF_API void otf_set_threads(int n);

#ifdef __cplusplus
}
#endif

#endif
