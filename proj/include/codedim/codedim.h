/*
 * C interface of the codedim library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a codedim_status; on failure the message is
 * available from codedim_last_error() on the calling thread until the next
 * failing call. Strings returned through char** are owned by the caller and
 * released with codedim_string_free().
 */
#ifndef CODEDIM_CODEDIM_H_
#define CODEDIM_CODEDIM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CODEDIM_BUILDING_LIBRARY)
#    define CODEDIM_API __declspec(dllexport)
#  else
#    define CODEDIM_API __declspec(dllimport)
#  endif
#else
#  define CODEDIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum codedim_status {
  CODEDIM_OK = 0,
  CODEDIM_ERR_INVALID_ARGUMENT = 1,
  CODEDIM_ERR_PARSE = 2,
  CODEDIM_ERR_GUARD = 3,
  CODEDIM_ERR_CONSISTENCY = 4,
  CODEDIM_ERR_IO = 5,
  CODEDIM_ERR_INTERNAL = 6
} codedim_status;

typedef enum codedim_format {
  CODEDIM_FORMAT_JSON = 0,
  CODEDIM_FORMAT_TEXT = 1,
  CODEDIM_FORMAT_M2 = 2
} codedim_format;

typedef struct codedim_complex codedim_complex;
typedef struct codedim_table codedim_table;
typedef struct codedim_report codedim_report;

/* Library version string, e.g. "1.0.0". */
CODEDIM_API const char* codedim_version(void);

/* Message of the last failed call on this thread ("" if none). */
CODEDIM_API const char* codedim_last_error(void);

CODEDIM_API const char* codedim_status_name(codedim_status status);

CODEDIM_API void codedim_string_free(char* s);

/* ---- complexes ---------------------------------------------------------- */

/* Complex of a code given as file text (see README for the grammar). */
CODEDIM_API codedim_status codedim_complex_from_code_text(const char* text,
                                                          codedim_complex** out);
CODEDIM_API codedim_status codedim_complex_from_code_file(const char* path,
                                                          codedim_complex** out);
/* Facet list in the same line grammar. */
CODEDIM_API codedim_status codedim_complex_from_facet_file(const char* path,
                                                           codedim_complex** out);
/* Inline codewords, e.g. "1100 1010 {3,4}". n <= 0 infers the size. */
CODEDIM_API codedim_status codedim_complex_from_codewords(const char* list, int n,
                                                          codedim_complex** out);
/* Facets as bit patterns (bit k set means vertex k+1). count == 0 gives the
   void complex. */
CODEDIM_API codedim_status codedim_complex_from_facets(int n, const uint32_t* facets,
                                                       size_t count,
                                                       codedim_complex** out);

/* Named fixture. Integer parameters < 0 select the generator's default. */
typedef struct codedim_generator_params {
  int i;
  int r;
  int m;
  int n;
  double density;
  uint64_t seed;
} codedim_generator_params;

CODEDIM_API codedim_generator_params codedim_generator_defaults(void);
CODEDIM_API codedim_status codedim_complex_generate(const char* name,
                                                    const codedim_generator_params* params,
                                                    codedim_complex** out);

CODEDIM_API int codedim_complex_vertex_count(const codedim_complex* complex);
CODEDIM_API size_t codedim_complex_facet_count(const codedim_complex* complex);
CODEDIM_API uint32_t codedim_complex_facet(const codedim_complex* complex, size_t index);
CODEDIM_API int codedim_complex_is_void(const codedim_complex* complex);
CODEDIM_API void codedim_complex_free(codedim_complex* complex);

/* ---- Betti tables ------------------------------------------------------- */

/* Hochster sweep over GF(p). max_n <= 0 uses the library default guard. */
CODEDIM_API codedim_status codedim_table_compute(const codedim_complex* complex,
                                                 uint32_t p, int max_n,
                                                 codedim_table** out);
CODEDIM_API size_t codedim_table_entry_count(const codedim_table* table);
CODEDIM_API codedim_status codedim_table_entry(const codedim_table* table, size_t index,
                                               int* step, uint32_t* sigma,
                                               uint64_t* beta);
/* Writes up to capacity level ranks into out; returns the full length. */
CODEDIM_API size_t codedim_table_level_ranks(const codedim_table* table, uint64_t* out,
                                             size_t capacity);
CODEDIM_API codedim_status codedim_table_format(const codedim_table* table,
                                                codedim_format format, char** out);
CODEDIM_API void codedim_table_free(codedim_table* table);

/* ---- dimension reports -------------------------------------------------- */

typedef struct codedim_dimensions {
  int n;
  uint32_t field;
  int d_leray;
  int d_helly;
  int d_hom_betti;
  int d_hom_unreduced;
  /* Witness steps are -1 when the defining maximum is empty. */
  int leray_step;
  uint32_t leray_sigma;
  int helly_step;
  uint32_t helly_sigma;
  int hom_betti_step;
  uint32_t hom_betti_sigma;
  int hom_unreduced_degree; /* -1 when absent */
  int leray_direct_agrees;
  int helly_direct_agrees;
} codedim_dimensions;

CODEDIM_API codedim_status codedim_report_compute(const codedim_complex* complex,
                                                  uint32_t p, int max_n,
                                                  codedim_report** out);
CODEDIM_API codedim_status codedim_report_dimensions(const codedim_report* report,
                                                     codedim_dimensions* out);
/* JSON or text; M2 format emits the BettiTally followed by "--" comment lines. */
CODEDIM_API codedim_status codedim_report_format(const codedim_report* report,
                                                 codedim_format format, char** out);
CODEDIM_API void codedim_report_free(codedim_report* report);

/* ---- randomized invariant suite ----------------------------------------- */

#define CODEDIM_CHECK_CORRUPT_TABLE 1u

typedef struct codedim_oracle_summary {
  uint64_t trials;
  uint64_t passed;
  uint64_t failed;
} codedim_oracle_summary;

/* Runs the invariant suite on `trials` random complexes on n <= 8 vertices.
   Returns CODEDIM_OK even when trials fail; inspect summary->failed. The
   optional text receives a human-readable summary. */
CODEDIM_API codedim_status codedim_oracle_check(int n, uint64_t trials, uint64_t seed,
                                                uint32_t p, unsigned flags,
                                                codedim_oracle_summary* summary,
                                                char** text);

#ifdef __cplusplus
}
#endif

#endif /* CODEDIM_CODEDIM_H_ */
