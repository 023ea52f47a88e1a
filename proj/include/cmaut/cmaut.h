#ifndef CMAUT_H
#define CMAUT_H

/* C interface to the cmaut library. Every function returns a cmaut_status;
 * on failure the error name and message of the calling thread can be read
 * back with cmaut_last_error_name / cmaut_last_error_message. Strings handed
 * out through char** parameters are owned by the caller and released with
 * cmaut_string_free. Polynomials travel as ascending comma-separated
 * coefficient lists ("-1,0,1" is x^2 - 1). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CMAUT_API __declspec(dllexport)
#else
#define CMAUT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cmaut_status {
  CMAUT_OK = 0,
  CMAUT_DOMAIN_ERROR = 1,
  CMAUT_USAGE_ERROR = 2,
  CMAUT_RESOURCE_LIMIT = 3,
  CMAUT_INTERNAL_ERROR = 4
} cmaut_status;

typedef struct cmaut_graph cmaut_graph;
typedef struct cmaut_decision cmaut_decision;
typedef struct cmaut_autgroup cmaut_autgroup;

CMAUT_API const char* cmaut_version(void);
CMAUT_API const char* cmaut_last_error_name(void);
CMAUT_API const char* cmaut_last_error_message(void);
CMAUT_API void cmaut_string_free(char* s);

CMAUT_API cmaut_status cmaut_cyclotomic(int64_t m, char** poly);
CMAUT_API cmaut_status cmaut_totient(int64_t m, int64_t* out);
/* Signed R(Phi_m, Phi_n), decimal. */
CMAUT_API cmaut_status cmaut_cyclo_resultant(int64_t m, int64_t n, char** value);
/* Sylvester resultant of two polynomials, decimal. */
CMAUT_API cmaut_status cmaut_resultant(const char* f, const char* g, char** value);
CMAUT_API cmaut_status cmaut_expected_order(const int64_t* orders, size_t count, int64_t* out);

/* automorphism: 1 when |c| = 1 at every root. found: 1 when c = sign x^k
 * modulo the product; sign and k are written only then. */
CMAUT_API cmaut_status cmaut_certify(const int64_t* orders, size_t count, const char* c, int* automorphism,
                                     int* found, int* sign, int64_t* k);

CMAUT_API cmaut_status cmaut_graph_build(const int64_t* orders, size_t count, cmaut_graph** out);
CMAUT_API void cmaut_graph_free(cmaut_graph* g);
CMAUT_API cmaut_status cmaut_graph_connected(const cmaut_graph* g, int* out);
CMAUT_API cmaut_status cmaut_graph_condition_tp(const cmaut_graph* g, int64_t p, int* out);
CMAUT_API cmaut_status cmaut_graph_condition_s2(const cmaut_graph* g, int* out);
CMAUT_API cmaut_status cmaut_graph_text(const cmaut_graph* g, char** out);
CMAUT_API cmaut_status cmaut_graph_json(const cmaut_graph* g, char** out);
CMAUT_API cmaut_status cmaut_graph_dot(const cmaut_graph* g, char** out);

/* max_lcm <= 0 selects the default bound of 10^6. */
CMAUT_API cmaut_status cmaut_decide(const int64_t* orders, size_t count, int64_t max_lcm, cmaut_decision** out);
CMAUT_API void cmaut_decision_free(cmaut_decision* d);
/* 0 trivial, 1 exotic */
CMAUT_API cmaut_status cmaut_decision_exotic(const cmaut_decision* d, int* out);
CMAUT_API cmaut_status cmaut_decision_reason(const cmaut_decision* d, char** out);
/* *out is set to NULL for trivial verdicts. */
CMAUT_API cmaut_status cmaut_decision_witness(const cmaut_decision* d, char** out);
CMAUT_API cmaut_status cmaut_decision_expected_order(const cmaut_decision* d, int64_t* out);
CMAUT_API cmaut_status cmaut_decision_text(const cmaut_decision* d, char** out);
CMAUT_API cmaut_status cmaut_decision_json(const cmaut_decision* d, char** out);

/* max_lcm <= 0 and max_tuples == 0 select the defaults (120 and 10^6). */
CMAUT_API cmaut_status cmaut_aut_group(const int64_t* orders, size_t count, int64_t max_lcm, uint64_t max_tuples,
                                       int representatives, cmaut_autgroup** out);
CMAUT_API void cmaut_autgroup_free(cmaut_autgroup* g);
CMAUT_API cmaut_status cmaut_autgroup_order(const cmaut_autgroup* g, uint64_t* out);
CMAUT_API cmaut_status cmaut_autgroup_text(const cmaut_autgroup* g, char** out);
CMAUT_API cmaut_status cmaut_autgroup_json(const cmaut_autgroup* g, char** out);

#ifdef __cplusplus
}
#endif

#endif
