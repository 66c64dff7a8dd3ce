/* C interface to the tdecomp library. All functions are thread-safe as long
 * as handles are not shared between threads while being freed. Strings
 * returned through `char**` are owned by the caller and released with
 * tdc_string_free. */
#ifndef TDECOMP_TDECOMP_H
#define TDECOMP_TDECOMP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TDC_API __declspec(dllexport)
#else
#define TDC_API __attribute__((visibility("default")))
#endif

typedef struct tdc_tournament tdc_tournament;
typedef struct tdc_list tdc_list;

typedef enum tdc_status {
  TDC_OK = 0,
  TDC_MISSING_PAIR,
  TDC_CONFLICTING_PAIR,
  TDC_SELF_ARC,
  TDC_VERTEX_OUT_OF_RANGE,
  TDC_NOT_INDECOMPOSABLE,
  TDC_CORE_NOT_INDECOMPOSABLE,
  TDC_CORE_TOO_SMALL,
  TDC_NOT_TRANSITIVE,
  TDC_BAD_SIZE,
  TDC_BAD_PARAMETERS,
  TDC_INFEASIBLE_SPEC,
  TDC_AMBIGUOUS_SPEC,
  TDC_NOT_FAMILY_T,
  TDC_NO_ELIGIBLE_VERTEX,
  TDC_BUDGET_EXCEEDED,
  TDC_PARSE_ERROR,
  TDC_NULL_ARGUMENT,
  TDC_INTERNAL
} tdc_status;

typedef enum tdc_report_format { TDC_REPORT_TEXT = 0, TDC_REPORT_JSON = 1, TDC_REPORT_DOT = 2 } tdc_report_format;

/* Enumeration filters; combine with |. Zero keeps every class. */
enum {
  TDC_FILTER_INDECOMPOSABLE = 1u,
  TDC_FILTER_FAMILY_T = 2u,
  TDC_FILTER_OMITS_W5 = 4u
};

typedef enum tdc_theorem {
  TDC_THEOREM_LATKA = 0,
  TDC_THEOREM_HIK = 1,
  TDC_THEOREM_MAIN = 2,
  TDC_THEOREM_LEMMAS = 3
} tdc_theorem;

TDC_API const char* tdc_version(void);
TDC_API const char* tdc_status_name(tdc_status status);
/* Message of the last failure on the calling thread; "" if none. */
TDC_API const char* tdc_last_error(void);
TDC_API void tdc_string_free(char* s);

TDC_API tdc_status tdc_parse(const char* record, tdc_tournament** out);
TDC_API tdc_status tdc_format(const tdc_tournament* t, char** out);
TDC_API tdc_status tdc_clone(const tdc_tournament* t, tdc_tournament** out);
TDC_API void tdc_tournament_free(tdc_tournament* t);
TDC_API int tdc_size(const tdc_tournament* t);
/* 1 if x -> y, 0 if y -> x, -1 on bad input. */
TDC_API int tdc_arc(const tdc_tournament* t, int x, int y);

/* name: C3, P7, B6, T, U, W (size 2n+1 >= 5) or TOTAL (size >= 1); size is
 * ignored by the fixed-size names. */
TDC_API tdc_status tdc_gen_named(const char* name, int size, tdc_tournament** out);
/* family: H, I, J, J*, K, K*, L, L*; one half-size per component. */
TDC_API tdc_status tdc_gen_family(const char* family, const int* component_sizes, size_t count,
                                  tdc_tournament** out);
TDC_API tdc_status tdc_gen_h_explicit(int k, int n, tdc_tournament** out);

TDC_API tdc_status tdc_analyze(const tdc_tournament* t, tdc_report_format format, char** out);

TDC_API tdc_status tdc_enumerate(int n, unsigned filter, int jobs, int force, tdc_list** out);
TDC_API size_t tdc_list_size(const tdc_list* list);
/* Borrowed handle, valid until the list is freed. */
TDC_API const tdc_tournament* tdc_list_at(const tdc_list* list, size_t index);
TDC_API void tdc_list_free(tdc_list* list);

/* n is the vertex count for LATKA and MAIN and the upper bound for HIK and
 * LEMMAS. *passed receives 1 or 0 and *report the rendered verdict. */
TDC_API tdc_status tdc_verify(tdc_theorem theorem, int n, int jobs, int force, int* passed, char** report);

#ifdef __cplusplus
}
#endif

#endif /* TDECOMP_TDECOMP_H */
