#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normalize.hpp"
#include "serialize.hpp"

namespace zaman {

struct TagOptions {
  std::optional<ReferenceDate> ref;
  bool strict_case = false;
};

class Tagger {
 public:
  explicit Tagger(Lexicon lexicon) : lexicon_(std::move(lexicon)) {}

  const Lexicon& lexicon() const { return lexicon_; }

  // tokenize -> match all rules -> leftmost-longest selection -> normalize.
  // Throws input_error on invalid UTF-8.
  AnnotatedDocument tag(std::string_view text, const TagOptions& options,
                        std::vector<std::string>* diagnostics = nullptr) const;

 private:
  Lexicon lexicon_;
};

}  // namespace zaman
