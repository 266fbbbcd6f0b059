/*
 * C interface to the ipf semigroup toolkit.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Every fallible call returns an ipf_status;
 * on failure ipf_last_error() describes the problem (thread-local, valid
 * until the next failing call on the same thread). Strings returned through
 * char** out-parameters are heap allocated and must be released with
 * ipf_string_free().
 */
#ifndef IPF_H
#define IPF_H

#include <stddef.h>

#if defined(_WIN32)
#  ifdef IPF_BUILDING_LIBRARY
#    define IPF_API __declspec(dllexport)
#  else
#    define IPF_API __declspec(dllimport)
#  endif
#else
#  define IPF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ipf_status {
  IPF_OK = 0,
  IPF_ERR_INVALID_ARGUMENT = 1,
  IPF_ERR_PARSE = 2,
  IPF_ERR_IO = 3,
  IPF_ERR_NOT_CLOSED = 4,
  IPF_ERR_NOT_ASSOCIATIVE = 5,
  IPF_ERR_EMPTY_GENERATOR_SET = 6,
  IPF_ERR_INVALID_PARAMETERS = 7,
  IPF_ERR_EMPTY_SEQUENCE = 8,
  IPF_ERR_SEQUENCE_TOO_LONG = 9,
  IPF_ERR_NOT_COMMUTATIVE = 10,
  IPF_ERR_NOT_ARCHIMEDEAN = 11,
  IPF_ERR_NOT_IN_NIL_PART = 12,
  IPF_ERR_WRONG_LENGTH = 13,
  IPF_ERR_NOT_ASSOCIATIVE_AFTER_GLUE = 14,
  IPF_ERR_ORDER_TOO_LARGE = 15,
  IPF_ERR_INTERNAL = 16
} ipf_status;

typedef struct ipf_semigroup ipf_semigroup;
typedef struct ipf_sequence ipf_sequence;

typedef struct ipf_options {
  unsigned workers; /* search threads, >= 1 */
  unsigned dp_cap;  /* longest sequence for the noncommutative product DP */
} ipf_options;

/* Bits for ipf_constants(). */
#define IPF_CONST_I 1u
#define IPF_CONST_SI 2u
#define IPF_CONST_D 4u

IPF_API const char* ipf_version(void);
IPF_API const char* ipf_status_name(ipf_status status);
IPF_API const char* ipf_last_error(void);
IPF_API void ipf_string_free(char* s);
IPF_API void ipf_options_init(ipf_options* opts);

/* Semigroups */
IPF_API ipf_status ipf_semigroup_create(int order, const int* cells, ipf_semigroup** out);
IPF_API ipf_status ipf_semigroup_parse(const char* text, ipf_semigroup** out);
IPF_API ipf_status ipf_semigroup_load(const char* path, ipf_semigroup** out);
IPF_API void ipf_semigroup_destroy(ipf_semigroup* s);
IPF_API int ipf_semigroup_order(const ipf_semigroup* s);
/* Returns -1 when a or b is out of range. */
IPF_API int ipf_semigroup_mul(const ipf_semigroup* s, int a, int b);
IPF_API int ipf_semigroup_is_commutative(const ipf_semigroup* s);
/* Canonical Cayley table text. */
IPF_API ipf_status ipf_semigroup_format(const ipf_semigroup* s, char** out);
/* JSON: order, idempotents, commutative, zero, identity. */
IPF_API ipf_status ipf_semigroup_describe(const ipf_semigroup* s, char** json_out);

/* Families: "cyclic-group p", "cyclic-nil n", "monogenic i p",
 * "ideal-extension n p", "group-over-nil n1 n2", "left-zero n", and
 * "extremal <mono:I:P|gbn:N:P>... [+identity]". The sequence out-parameter is
 * set only for "extremal" and may be NULL otherwise. */
IPF_API ipf_status ipf_generate(const char* family, const char* const* params, int nparams,
                                ipf_semigroup** s_out, ipf_sequence** t_out);

/* Sequences */
IPF_API ipf_status ipf_sequence_create(const int* terms, size_t length, ipf_sequence** out);
IPF_API ipf_status ipf_sequence_parse(const char* text, ipf_sequence** out);
IPF_API ipf_status ipf_sequence_load(const char* path, ipf_sequence** out);
IPF_API void ipf_sequence_destroy(ipf_sequence* t);
IPF_API size_t ipf_sequence_length(const ipf_sequence* t);
IPF_API int ipf_sequence_term(const ipf_sequence* t, size_t i);
IPF_API ipf_status ipf_sequence_format(const ipf_sequence* t, char** out);

/* Products and freeness. opts may be NULL for defaults. */
IPF_API ipf_status ipf_products(const ipf_semigroup* s, const ipf_sequence* t,
                                const ipf_options* opts, char** json_out);
IPF_API ipf_status ipf_free_check(const ipf_semigroup* s, const ipf_sequence* t, int strong,
                                  const ipf_options* opts, int* is_free);
IPF_API ipf_status ipf_lambda(const ipf_semigroup* s, const ipf_sequence* t, int x,
                              const ipf_options* opts, size_t* value);

/* Constants: JSON array of reports; D is replaced by a note on
 * noncommutative input. */
IPF_API ipf_status ipf_constants(const ipf_semigroup* s, unsigned which,
                                 const ipf_options* opts, char** json_out);

/* Structural certificate plus brute-force freeness; *equivalent is 1 when
 * both sides agree. */
IPF_API ipf_status ipf_check_extremal(const ipf_semigroup* s, const ipf_sequence* t,
                                      const ipf_options* opts, char** json_out, int* equivalent);

/* Enumeration. The callback receives each table in lexicographic order and
 * returns nonzero to continue. resume_prefix may be NULL. */
typedef int (*ipf_table_callback)(int order, const int* cells, void* user);
IPF_API ipf_status ipf_enumerate(int order, int commutative_only, int dedup_iso,
                                 const int* resume_prefix, size_t prefix_length, int allow_order5,
                                 unsigned workers, ipf_table_callback callback, void* user);

typedef struct ipf_verify_options {
  int min_order;
  int max_order;
  int commutative_only;
  const char* checks; /* comma separated ids, NULL or "" for all */
  unsigned workers;
  unsigned dp_cap;
  int allow_order5;
  int include_timing;
} ipf_verify_options;

IPF_API void ipf_verify_options_init(ipf_verify_options* opts);
IPF_API ipf_status ipf_verify(const ipf_verify_options* opts, char** json_out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* IPF_H */
