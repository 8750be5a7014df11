/*
 * C interface to the Koch chain / dual arrangement toolkit.
 *
 * Objects are opaque handles created by koch_*_create-style functions and
 * released with the matching koch_*_free. Every fallible call returns a
 * koch_status; on failure koch_last_error() describes the problem for the
 * calling thread. Strings handed back through char** out-parameters are
 * heap allocated and must be released with koch_string_free().
 *
 * All numbers that leave the library are exact: rationals are written as
 * "num/den" strings inside the JSON documents.
 */
#ifndef KOCH_H
#define KOCH_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(KOCH_BUILDING_LIBRARY)
#    define KOCH_API __declspec(dllexport)
#  else
#    define KOCH_API __declspec(dllimport)
#  endif
#else
#  define KOCH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum koch_status {
  KOCH_OK = 0,
  KOCH_E_INVALID_ARGUMENT = 1,
  KOCH_E_PARALLEL_LINES = 2,
  KOCH_E_DUPLICATE_SLOPE = 3,
  KOCH_E_CONCURRENT_LINES = 4,
  KOCH_E_DEGENERATE_TRIPLE = 5,
  KOCH_E_FLATTENING_DIVERGENCE = 6,
  KOCH_E_CHAIN_INVALID = 7,
  KOCH_E_MISSING_ANTIPODE = 8,
  KOCH_E_PARSE = 9,
  KOCH_E_INTERNAL = 10
} koch_status;

typedef enum koch_render_mode {
  KOCH_RENDER_PRIMAL = 0,
  KOCH_RENDER_DUAL = 1
} koch_render_mode;

typedef struct koch_chain koch_chain;
typedef struct koch_arrangement koch_arrangement;

KOCH_API const char* koch_status_string(koch_status status);

/* Message of the last failed call on this thread; "" if none. */
KOCH_API const char* koch_last_error(void);

KOCH_API void koch_string_free(char* str);

/* ---- chains ----------------------------------------------------------- */

/* Generates K_s. exponents may be NULL (search for the smallest valid
 * flattening exponent per level); otherwise it must hold s - 1 values, one
 * per level 2 .. s, used verbatim. */
KOCH_API koch_status koch_chain_generate(int s, const int* exponents,
                                         size_t exponent_count,
                                         koch_chain** out);

/* Parses the chain JSON format. No geometric validation happens here. */
KOCH_API koch_status koch_chain_from_json(const char* json, koch_chain** out);

KOCH_API koch_status koch_chain_to_json(const koch_chain* chain, char** out);

KOCH_API koch_status koch_chain_info(const koch_chain* chain, int* s,
                                     size_t* point_count);

/* Writes 1 to *valid iff all four validity checks pass. report_json may be
 * NULL; otherwise it receives the flags and witness index tuples. */
KOCH_API koch_status koch_chain_validate(const koch_chain* chain, int* valid,
                                         char** report_json);

/* Writes 1 to *equal iff both chains have identical orientation signs on
 * every triple. */
KOCH_API koch_status koch_chain_same_order_type(const koch_chain* a,
                                                const koch_chain* b,
                                                int* equal);

KOCH_API void koch_chain_free(koch_chain* chain);

/* ---- dual arrangements -------------------------------------------------- */

KOCH_API koch_status koch_arrangement_build(const koch_chain* chain,
                                            koch_arrangement** out);

KOCH_API koch_status koch_arrangement_info(const koch_arrangement* arr,
                                           size_t* lines, size_t* vertices,
                                           size_t* faces);

/* Euclidean census (projective == 0) or projective census (projective != 0)
 * as JSON. */
KOCH_API koch_status koch_arrangement_census_json(const koch_arrangement* arr,
                                                  int projective, char** out);

/* Number of faces with exactly edge_count edges. In the Euclidean plane all
 * faces count, bounded or not. */
KOCH_API koch_status koch_arrangement_face_count(const koch_arrangement* arr,
                                                 int projective,
                                                 int edge_count, long* count);

/* Runs the sign-vector oracle on the same lines. *equal is 1 iff its
 * Euclidean and projective censuses match the builder's. oracle_json may be
 * NULL; otherwise it receives the oracle's Euclidean census. */
KOCH_API koch_status koch_arrangement_oracle(const koch_arrangement* arr,
                                             int* equal, char** oracle_json);

KOCH_API void koch_arrangement_free(koch_arrangement* arr);

/* ---- verification and rendering ---------------------------------------- */

/* Full pipeline for each generated K_s with s in [s_lo, s_hi]. The oracle is
 * cross-checked for s <= oracle_cap. *all_pass is 1 iff every named check
 * passed. */
KOCH_API koch_status koch_verify_range(int s_lo, int s_hi, int oracle_cap,
                                       int* all_pass, char** report_json);

/* Same pipeline for one externally supplied chain. */
KOCH_API koch_status koch_verify_chain(const koch_chain* chain, int oracle_cap,
                                       int* all_pass, char** report_json);

/* clip may be NULL or a "num/den" half-width for the dual window. */
KOCH_API koch_status koch_render_svg(const koch_chain* chain,
                                     koch_render_mode mode, int width_px,
                                     const char* clip, char** svg);

#ifdef __cplusplus
}
#endif

#endif /* KOCH_H */
