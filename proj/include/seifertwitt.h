#ifndef SEIFERTWITT_H
#define SEIFERTWITT_H

#include <stdint.h>

#if defined(_WIN32)
#define SW_API __declspec(dllexport)
#else
#define SW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
    SW_OK = 0,
    SW_ERROR = 1,           /* internal failure */
    SW_ERR_SCHEMA = 2,      /* malformed input */
    SW_ERR_INVALID = 3,     /* input violates a module or form invariant */
    SW_ERR_UNSUPPORTED = 4, /* result produced, but some piece is out of scope */
    SW_ERR_ARGUMENT = 5     /* bad call: null handle, negative degree */
};

typedef struct sw_input sw_input;
typedef struct sw_result sw_result;

typedef struct {
    uint64_t seed;
    int degree;
} sw_options;

SW_API const char* sw_version(void);
/* message for the last failing call on this thread */
SW_API const char* sw_last_error(void);
SW_API void sw_options_default(sw_options* opt);

SW_API int sw_input_parse(const char* json, sw_input** out);
SW_API int sw_input_load(const char* path, sw_input** out);
SW_API void sw_input_free(sw_input* in);
SW_API int sw_input_mu(const sw_input* in);
SW_API int sw_input_dim(const sw_input* in);
SW_API int sw_input_has_form(const sw_input* in);
SW_API int sw_input_zeta(const sw_input* in); /* 0 without a form */

/* On SW_OK or SW_ERR_UNSUPPORTED *out holds a result the caller frees. */
SW_API int sw_run_invariants(const sw_input* in, const sw_options* opt, sw_result** out);
SW_API int sw_run_cobordant(const sw_input* a, const sw_input* b, const sw_options* opt, sw_result** out);
SW_API int sw_run_cover(const sw_input* in, const sw_options* opt, sw_result** out);
SW_API int sw_run_primitive(const sw_input* in, const sw_options* opt, sw_result** out);

SW_API const char* sw_result_json(const sw_result* r);
SW_API const char* sw_result_text(const sw_result* r);
SW_API const char* sw_result_verdict(const sw_result* r);
SW_API void sw_result_free(sw_result* r);

#ifdef __cplusplus
}
#endif

#endif
