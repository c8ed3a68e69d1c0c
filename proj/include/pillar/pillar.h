/* C interface to the pillar library.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Functions that can fail return a pillar_status;
 * on failure the out-parameter is left untouched and pillar_last_error()
 * describes the problem. Error state is per thread. Strings returned through
 * char** are heap allocated and must be released with pillar_string_free().
 *
 * A letter budget of 0 selects the library default (10^7 letters).
 */
#ifndef PILLAR_PILLAR_H_
#define PILLAR_PILLAR_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(PILLAR_BUILDING_LIBRARY)
#define PILLAR_API __declspec(dllexport)
#else
#define PILLAR_API __declspec(dllimport)
#endif
#else
#define PILLAR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pillar_word pillar_word;
typedef struct pillar_morphism pillar_morphism;
typedef struct pillar_report pillar_report;

typedef enum pillar_status {
  PILLAR_OK = 0,
  PILLAR_ERR_PARSE = 1,
  PILLAR_ERR_BASIS_MISMATCH = 2,
  PILLAR_ERR_INDEX_RANGE = 3,
  PILLAR_ERR_BUDGET = 4,
  PILLAR_ERR_NOT_Z_STABLE = 5,
  PILLAR_ERR_INVALID_ARGUMENT = 6,
  PILLAR_ERR_INTERNAL = 7
} pillar_status;

typedef enum pillar_basis_kind {
  PILLAR_BASIS_XY = 0,
  PILLAR_BASIS_YZ = 1,
  PILLAR_BASIS_ABSTRACT = 2
} pillar_basis_kind;

/* Check selection for pillar_verify. */
enum {
  PILLAR_CHECK_FACTORIZATION = 1u << 0,      /* sigma_i as twist products */
  PILLAR_CHECK_CHAINS = 1u << 1,             /* stepwise twist chains */
  PILLAR_CHECK_RELATIONS = 1u << 2,          /* braid relations among sigma_i */
  PILLAR_CHECK_RELATOR = 1u << 3,            /* every generator fixes R */
  PILLAR_CHECK_ARTIN_RESTRICTION = 1u << 4,  /* z-subgroup restriction = Artin */
  PILLAR_CHECK_YZ_ROUNDTRIP = 1u << 5,       /* {x,y} <-> {y,z} basis change */
  PILLAR_CHECK_INVERSES = 1u << 6,           /* shipped inverse pairs */
  PILLAR_CHECK_ALL = (1u << 7) - 1u
};

PILLAR_API const char* pillar_version(void);
PILLAR_API const char* pillar_last_error(void);
/* Byte offset of the last parse error, or SIZE_MAX if it had none. */
PILLAR_API size_t pillar_last_error_position(void);
PILLAR_API void pillar_string_free(char* s);

/* Words. n is the genus for XY/YZ and the rank for ABSTRACT. */
PILLAR_API pillar_status pillar_word_parse(pillar_basis_kind kind, int n, const char* text,
                                           pillar_word** out);
PILLAR_API pillar_status pillar_word_format(const pillar_word* w, char** out);
PILLAR_API size_t pillar_word_length(const pillar_word* w);
PILLAR_API pillar_status pillar_word_multiply(const pillar_word* u, const pillar_word* v,
                                              pillar_word** out);
PILLAR_API pillar_status pillar_word_invert(const pillar_word* w, pillar_word** out);
PILLAR_API int pillar_word_equal(const pillar_word* u, const pillar_word* v);
PILLAR_API void pillar_word_free(pillar_word* w);

/* Morphisms. */
PILLAR_API pillar_status pillar_identity(pillar_basis_kind kind, int n, pillar_morphism** out);
PILLAR_API pillar_status pillar_twist_word_action(int genus, const char* twist_word, size_t budget,
                                                  pillar_morphism** out);
PILLAR_API pillar_status pillar_sigma_action(int index, int genus, pillar_morphism** out);
PILLAR_API pillar_status pillar_sigma_yz_action(int index, int genus, pillar_morphism** out);
PILLAR_API pillar_status pillar_braid_psi_action(int genus, const char* braid_word, size_t budget,
                                                 pillar_morphism** out);
PILLAR_API pillar_status pillar_braid_artin_action(int strands, const char* braid_word,
                                                   size_t budget, pillar_morphism** out);
PILLAR_API pillar_status pillar_morphism_apply(const pillar_morphism* f, const pillar_word* w,
                                               size_t budget, pillar_word** out);
/* h first, then f. */
PILLAR_API pillar_status pillar_morphism_compose(const pillar_morphism* f,
                                                 const pillar_morphism* h, size_t budget,
                                                 pillar_morphism** out);
PILLAR_API pillar_status pillar_morphism_equal(const pillar_morphism* f, const pillar_morphism* h,
                                               int* out);
PILLAR_API pillar_status pillar_morphism_fixes_relator(const pillar_morphism* f, int* out);
PILLAR_API pillar_status pillar_morphism_to_json(const pillar_morphism* f, char** out);
PILLAR_API pillar_status pillar_morphism_from_json(const char* json, pillar_morphism** out);
PILLAR_API void pillar_morphism_free(pillar_morphism* f);

/* Word problem in the braid group: *out is 1 for the trivial braid. */
PILLAR_API pillar_status pillar_braid_is_trivial(int strands, const char* braid_word,
                                                 size_t budget, int* out);

/* Verification. checks is a mask of PILLAR_CHECK_* values; seed drives the
 * randomized round-trip check. */
PILLAR_API pillar_status pillar_verify(int genus, unsigned checks, uint64_t seed, size_t budget,
                                       pillar_report** out);
PILLAR_API int pillar_report_holds(const pillar_report* r);
PILLAR_API size_t pillar_report_case_count(const pillar_report* r);
PILLAR_API pillar_status pillar_report_to_json(const pillar_report* r, char** out);
PILLAR_API pillar_status pillar_report_to_text(const pillar_report* r, char** out);
PILLAR_API void pillar_report_free(pillar_report* r);

#ifdef __cplusplus
}
#endif

#endif /* PILLAR_PILLAR_H_ */
