#include "pipeline.hpp"

#include "patterns.hpp"
#include "tokenizer.hpp"

namespace zaman {

AnnotatedDocument Tagger::tag(std::string_view text, const TagOptions& options,
                              std::vector<std::string>* diagnostics) const {
  TokenStream stream = tokenize(text);
  MatchOptions match_options;
  match_options.strict_case = options.strict_case;
  std::vector<RawMatch> matches = resolve(scan(stream, lexicon_, match_options));
  AnnotatedDocument doc;
  doc.timexes.reserve(matches.size());
  for (const RawMatch& match : matches) {
    doc.timexes.push_back(normalize(match, stream, options.ref, diagnostics));
  }
  assign_tids(doc.timexes);
  doc.text = std::move(stream.source);
  return doc;
}

}  // namespace zaman
