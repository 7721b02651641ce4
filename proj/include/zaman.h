/* C interface for the Turkish temporal expression tagger. All functions
 * returning zaman_status set a thread-local message retrievable with
 * zaman_last_error() on failure. Objects are created through out-pointers
 * and released with the matching _free function; strings returned through
 * char** out-pointers are released with zaman_string_free(). */
#ifndef ZAMAN_H
#define ZAMAN_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(ZAMAN_BUILD)
#    define ZAMAN_API __declspec(dllexport)
#  else
#    define ZAMAN_API __declspec(dllimport)
#  endif
#else
#  define ZAMAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zaman_status {
  ZAMAN_OK = 0,
  ZAMAN_ERR_INVALID_ARGUMENT = 1, /* null/violating arguments, bad indices */
  ZAMAN_ERR_IO = 2,               /* unreadable files */
  ZAMAN_ERR_PARSE = 3,            /* malformed lexicon TSV or gold TimeML */
  ZAMAN_ERR_BAD_INPUT = 4,        /* invalid UTF-8 or reference date */
  ZAMAN_ERR_INTERNAL = 5
} zaman_status;

typedef struct zaman_lexicon zaman_lexicon;
typedef struct zaman_tagger zaman_tagger;
typedef struct zaman_document zaman_document;
typedef struct zaman_evaluator zaman_evaluator;

typedef struct zaman_options {
  /* Reference date "YYYY-MM-DD" anchoring deictic expressions, or NULL:
   * then relative expressions degrade to wildcard values and each
   * degradation is recorded as a document diagnostic. */
  const char* ref_date;
  /* Nonzero: month and weekday names must be capitalized to match. */
  int strict_case;
} zaman_options;

/* One annotation; all pointers stay valid until the owning document is
 * freed. quant and freq are NULL when the attribute is absent. begin/end
 * are byte offsets into the document text, end exclusive. */
typedef struct zaman_timex {
  const char* tid;
  const char* type;
  const char* value;
  const char* quant;
  const char* freq;
  size_t begin;
  size_t end;
  const char* text;
} zaman_timex;

ZAMAN_API const char* zaman_version(void);

/* Message of the most recent failing call on this thread ("" initially). */
ZAMAN_API const char* zaman_last_error(void);

/* Built-in lexicon: generated numerals/ordinals plus the default word
 * table. */
ZAMAN_API zaman_status zaman_lexicon_default(zaman_lexicon** out);
/* Generated numerals/ordinals plus the TSV at path instead of the default
 * word table. */
ZAMAN_API zaman_status zaman_lexicon_load(const char* path, zaman_lexicon** out);
/* Built-in lexicon with the TSV at path layered on top (later entries
 * shadow earlier ones per surface and class). */
ZAMAN_API zaman_status zaman_lexicon_with_overrides(const char* path,
                                                    zaman_lexicon** out);
ZAMAN_API size_t zaman_lexicon_entry_count(const zaman_lexicon* lexicon);
ZAMAN_API void zaman_lexicon_free(zaman_lexicon* lexicon);

/* The tagger copies the lexicon; the lexicon may be freed afterwards. */
ZAMAN_API zaman_status zaman_tagger_new(const zaman_lexicon* lexicon,
                                        zaman_tagger** out);
ZAMAN_API void zaman_tagger_free(zaman_tagger* tagger);

/* Annotates UTF-8 text. options may be NULL for defaults. */
ZAMAN_API zaman_status zaman_tag(const zaman_tagger* tagger, const char* text,
                                 const zaman_options* options,
                                 zaman_document** out);

/* Parses inline TimeML (the render_inline format) into a document. */
ZAMAN_API zaman_status zaman_parse_gold(const char* content, zaman_document** out);

ZAMAN_API const char* zaman_document_text(const zaman_document* doc);
ZAMAN_API size_t zaman_document_count(const zaman_document* doc);
ZAMAN_API zaman_status zaman_document_timex(const zaman_document* doc, size_t index,
                                            zaman_timex* out);
ZAMAN_API size_t zaman_document_diagnostic_count(const zaman_document* doc);
/* NULL when index is out of range. */
ZAMAN_API const char* zaman_document_diagnostic(const zaman_document* doc,
                                                size_t index);
ZAMAN_API void zaman_document_free(zaman_document* doc);

/* Document text with TIMEX3 elements wrapped around the annotations. */
ZAMAN_API zaman_status zaman_render_inline(const zaman_document* doc, char** out);
/* JSON with the text and one record per annotation. */
ZAMAN_API zaman_status zaman_render_standoff(const zaman_document* doc, char** out);
ZAMAN_API void zaman_string_free(char* s);

/* Micro-averaged strict/relaxed precision, recall and F1, overall and per
 * type, accumulated document by document. */
ZAMAN_API zaman_status zaman_evaluator_new(zaman_evaluator** out);
ZAMAN_API zaman_status zaman_evaluator_add(zaman_evaluator* evaluator,
                                           const zaman_document* gold,
                                           const zaman_document* system);
ZAMAN_API zaman_status zaman_evaluator_report_text(const zaman_evaluator* evaluator,
                                                   char** out);
ZAMAN_API zaman_status zaman_evaluator_report_json(const zaman_evaluator* evaluator,
                                                   char** out);
/* Overall strict F1 so far; 0.0 when nothing was added. */
ZAMAN_API double zaman_evaluator_strict_f1(const zaman_evaluator* evaluator);
ZAMAN_API void zaman_evaluator_free(zaman_evaluator* evaluator);

#ifdef __cplusplus
}
#endif

#endif /* ZAMAN_H */
