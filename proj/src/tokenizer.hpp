#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexicon.hpp"

namespace zaman {

struct Token {
  std::string text;        // original byte slice of the source
  std::size_t begin = 0;   // half-open byte span: source.substr(begin, end - begin) == text
  std::size_t end = 0;
  std::string folded;      // Turkish-lowercased text
  std::string stem;        // folded with the apostrophe suffix removed; == folded otherwise
  // Raw remainder after the first apostrophe (one element) — segmentation
  // into suffix forms is split_apostrophe's job, which needs a lexicon.
  std::vector<std::string> suffixes;
  bool has_apostrophe = false;
};

struct TokenStream {
  std::string source;
  std::vector<Token> tokens;
};

// Splits on whitespace and punctuation, except that '.', '/' and ':' stay
// inside a token between two digits ("23.03.2015", "14:00") and that the
// apostrophes U+0027 and U+2019 stay inside a token between a token
// character and a letter ("Mart'ın"). Separators carry no tokens; spans
// alone reconstruct the source. Throws input_error on invalid UTF-8.
TokenStream tokenize(std::string_view text);

// (stem, suffix list): the remainder after the apostrophe is greedily
// segmented into known SUF forms, longest first; an unsegmentable tail is
// kept as a single opaque suffix. Tokens without an apostrophe come back
// unchanged with an empty list.
std::pair<std::string, std::vector<std::string>> split_apostrophe(const Token& token,
                                                                  const Lexicon& lexicon);

struct StripCandidate {
  std::string base;
  std::vector<std::string> suffixes;  // textual (left-to-right) order
  friend bool operator==(const StripCandidate&, const StripCandidate&) = default;
};

// The folded form itself plus every prefix reachable by stripping up to
// three known SUF forms off the right, longest prefix first. Stripped
// candidates are kept only when the prefix classifies to some lexicon
// class; the original form is always kept. Each base keeps the chain with
// the fewest suffixes that produced it.
std::vector<StripCandidate> strip_suffixes(std::string_view folded, const Lexicon& lexicon);

}  // namespace zaman
