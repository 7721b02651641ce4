#include "zaman.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "eval.hpp"
#include "pipeline.hpp"
#include "serialize.hpp"

struct zaman_lexicon {
  zaman::Lexicon impl;
};

struct zaman_tagger {
  zaman::Tagger impl;
};

struct zaman_document {
  zaman::AnnotatedDocument impl;
  std::vector<std::string> tids;
  std::vector<std::string> type_names;
  std::vector<std::string> diagnostics;

  void index() {
    tids.clear();
    type_names.clear();
    for (std::size_t i = 0; i < impl.timexes.size(); ++i) {
      tids.push_back(zaman::tid_name(i));
      type_names.push_back(zaman::timex_type_name(impl.timexes[i].type));
    }
  }
};

struct zaman_evaluator {
  zaman::EvalReport report;
};

namespace {

thread_local std::string t_last_error;

template <typename Fn>
zaman_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return ZAMAN_OK;
  } catch (const zaman::input_error& e) {
    t_last_error = e.what();
    return ZAMAN_ERR_BAD_INPUT;
  } catch (const zaman::parse_error& e) {
    t_last_error = e.what();
    return ZAMAN_ERR_PARSE;
  } catch (const zaman::io_error& e) {
    t_last_error = e.what();
    return ZAMAN_ERR_IO;
  } catch (const std::invalid_argument& e) {
    t_last_error = e.what();
    return ZAMAN_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return ZAMAN_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return ZAMAN_ERR_INTERNAL;
  }
}

zaman_status invalid(const char* what) {
  t_last_error = what;
  return ZAMAN_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* zaman_version(void) { return "0.1.0"; }

const char* zaman_last_error(void) { return t_last_error.c_str(); }

zaman_status zaman_lexicon_default(zaman_lexicon** out) {
  if (out == nullptr) return invalid("out must not be null");
  return guarded([&] { *out = new zaman_lexicon{zaman::Lexicon::defaults()}; });
}

zaman_status zaman_lexicon_load(const char* path, zaman_lexicon** out) {
  if (path == nullptr || out == nullptr) {
    return invalid("path and out must not be null");
  }
  return guarded([&] { *out = new zaman_lexicon{zaman::Lexicon::load(path)}; });
}

zaman_status zaman_lexicon_with_overrides(const char* path, zaman_lexicon** out) {
  if (path == nullptr || out == nullptr) {
    return invalid("path and out must not be null");
  }
  return guarded([&] {
    *out = new zaman_lexicon{
        zaman::Lexicon::defaults_with_overrides(std::string(path))};
  });
}

size_t zaman_lexicon_entry_count(const zaman_lexicon* lexicon) {
  return lexicon == nullptr ? 0 : lexicon->impl.entry_count();
}

void zaman_lexicon_free(zaman_lexicon* lexicon) { delete lexicon; }

zaman_status zaman_tagger_new(const zaman_lexicon* lexicon, zaman_tagger** out) {
  if (lexicon == nullptr || out == nullptr) {
    return invalid("lexicon and out must not be null");
  }
  return guarded([&] { *out = new zaman_tagger{zaman::Tagger(lexicon->impl)}; });
}

void zaman_tagger_free(zaman_tagger* tagger) { delete tagger; }

zaman_status zaman_tag(const zaman_tagger* tagger, const char* text,
                       const zaman_options* options, zaman_document** out) {
  if (tagger == nullptr || text == nullptr || out == nullptr) {
    return invalid("tagger, text and out must not be null");
  }
  return guarded([&] {
    zaman::TagOptions tag_options;
    if (options != nullptr) {
      if (options->ref_date != nullptr) {
        tag_options.ref = zaman::ReferenceDate::parse(options->ref_date);
      }
      tag_options.strict_case = options->strict_case != 0;
    }
    auto doc = std::make_unique<zaman_document>();
    doc->impl = tagger->impl.tag(text, tag_options, &doc->diagnostics);
    doc->index();
    *out = doc.release();
  });
}

zaman_status zaman_parse_gold(const char* content, zaman_document** out) {
  if (content == nullptr || out == nullptr) {
    return invalid("content and out must not be null");
  }
  return guarded([&] {
    auto doc = std::make_unique<zaman_document>();
    doc->impl = zaman::parse_gold(content);
    doc->index();
    *out = doc.release();
  });
}

const char* zaman_document_text(const zaman_document* doc) {
  return doc == nullptr ? nullptr : doc->impl.text.c_str();
}

size_t zaman_document_count(const zaman_document* doc) {
  return doc == nullptr ? 0 : doc->impl.timexes.size();
}

zaman_status zaman_document_timex(const zaman_document* doc, size_t index,
                                  zaman_timex* out) {
  if (doc == nullptr || out == nullptr) {
    return invalid("doc and out must not be null");
  }
  if (index >= doc->impl.timexes.size()) {
    return invalid("timex index out of range");
  }
  const zaman::Timex3& t = doc->impl.timexes[index];
  out->tid = doc->tids[index].c_str();
  out->type = doc->type_names[index].c_str();
  out->value = t.value.c_str();
  out->quant = t.quant ? t.quant->c_str() : nullptr;
  out->freq = t.freq ? t.freq->c_str() : nullptr;
  out->begin = t.begin;
  out->end = t.end;
  out->text = t.text.c_str();
  t_last_error.clear();
  return ZAMAN_OK;
}

size_t zaman_document_diagnostic_count(const zaman_document* doc) {
  return doc == nullptr ? 0 : doc->diagnostics.size();
}

const char* zaman_document_diagnostic(const zaman_document* doc, size_t index) {
  if (doc == nullptr || index >= doc->diagnostics.size()) return nullptr;
  return doc->diagnostics[index].c_str();
}

void zaman_document_free(zaman_document* doc) { delete doc; }

zaman_status zaman_render_inline(const zaman_document* doc, char** out) {
  if (doc == nullptr || out == nullptr) {
    return invalid("doc and out must not be null");
  }
  return guarded([&] {
    *out = copy_string(zaman::render_inline(doc->impl.text, doc->impl.timexes));
  });
}

zaman_status zaman_render_standoff(const zaman_document* doc, char** out) {
  if (doc == nullptr || out == nullptr) {
    return invalid("doc and out must not be null");
  }
  return guarded([&] {
    *out = copy_string(zaman::render_standoff(doc->impl.text, doc->impl.timexes));
  });
}

void zaman_string_free(char* s) { std::free(s); }

zaman_status zaman_evaluator_new(zaman_evaluator** out) {
  if (out == nullptr) return invalid("out must not be null");
  return guarded([&] { *out = new zaman_evaluator{}; });
}

zaman_status zaman_evaluator_add(zaman_evaluator* evaluator,
                                 const zaman_document* gold,
                                 const zaman_document* system) {
  if (evaluator == nullptr || gold == nullptr || system == nullptr) {
    return invalid("evaluator, gold and system must not be null");
  }
  return guarded([&] {
    zaman::eval_add(evaluator->report, gold->impl.timexes, system->impl.timexes);
  });
}

zaman_status zaman_evaluator_report_text(const zaman_evaluator* evaluator,
                                         char** out) {
  if (evaluator == nullptr || out == nullptr) {
    return invalid("evaluator and out must not be null");
  }
  return guarded([&] { *out = copy_string(zaman::to_text(evaluator->report)); });
}

zaman_status zaman_evaluator_report_json(const zaman_evaluator* evaluator,
                                         char** out) {
  if (evaluator == nullptr || out == nullptr) {
    return invalid("evaluator and out must not be null");
  }
  return guarded([&] { *out = copy_string(zaman::to_json(evaluator->report)); });
}

double zaman_evaluator_strict_f1(const zaman_evaluator* evaluator) {
  return evaluator == nullptr ? 0.0 : evaluator->report.overall.strict.f1();
}

void zaman_evaluator_free(zaman_evaluator* evaluator) { delete evaluator; }

}  // extern "C"
