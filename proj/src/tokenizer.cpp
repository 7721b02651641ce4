#include "tokenizer.hpp"

#include <algorithm>
#include <map>

#include "turkish.hpp"

namespace zaman {

namespace {

bool is_space_cp(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\v': case U'\f':
    case U' ': case U' ': case U' ': case U' ':
    case U' ': case U' ': case U'　':
      return true;
    default:
      return cp >= U' ' && cp <= U' ';
  }
}

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == U'’'; }

bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

// Default separators. '.', '/', ':' and the apostrophes are here too; the
// tokenizer keeps them in-token only in their digit/letter contexts.
bool is_separator_punct(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'!' && cp <= U'/') || (cp >= U':' && cp <= U'@') ||
           (cp >= U'[' && cp <= U'`') || (cp >= U'{' && cp <= U'~');
  }
  if (cp == U'«' || cp == U'»' || cp == U'·') return true;
  // General punctuation (dashes, quotes, ellipsis, daggers, permille).
  return cp >= U'‐' && cp <= U'⁞' && !is_space_cp(cp);
}

bool is_token_char(char32_t cp) {
  return !is_space_cp(cp) && !is_separator_punct(cp) && !is_apostrophe(cp);
}

struct Cp {
  char32_t cp;
  std::size_t begin;
  std::size_t end;
};

}  // namespace

TokenStream tokenize(std::string_view text) {
  std::vector<Cp> cps;
  cps.reserve(text.size());
  {
    std::size_t pos = 0;
    char32_t cp;
    while (pos < text.size()) {
      const std::size_t begin = pos;
      if (!utf8::decode(text, pos, cp)) {
        throw input_error("invalid UTF-8 at byte " + std::to_string(pos));
      }
      cps.push_back({cp, begin, pos});
    }
  }

  TokenStream stream;
  stream.source.assign(text);

  std::size_t i = 0;
  while (i < cps.size()) {
    if (!is_token_char(cps[i].cp)) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < cps.size()) {
      const char32_t cp = cps[j].cp;
      if (is_token_char(cp)) {
        ++j;
        continue;
      }
      const bool digit_sep = (cp == U'.' || cp == U'/' || cp == U':') &&
                             is_ascii_digit(cps[j - 1].cp) &&
                             j + 1 < cps.size() && is_ascii_digit(cps[j + 1].cp);
      const bool in_token_apostrophe =
          is_apostrophe(cp) && j + 1 < cps.size() &&
          is_token_char(cps[j + 1].cp) && !is_ascii_digit(cps[j + 1].cp);
      if (digit_sep || in_token_apostrophe) {
        ++j;
        continue;
      }
      break;
    }

    Token token;
    token.begin = cps[i].begin;
    token.end = cps[j - 1].end;
    token.text.assign(text.substr(token.begin, token.end - token.begin));
    token.folded = fold_turkish(token.text);

    // Locate the first apostrophe in the folded form (folding never touches
    // apostrophes, so byte search is safe).
    std::size_t apos = token.folded.find('\'');
    std::size_t apos_len = 1;
    const std::size_t curly = token.folded.find("\xE2\x80\x99");
    if (curly != std::string::npos && (apos == std::string::npos || curly < apos)) {
      apos = curly;
      apos_len = 3;
    }
    if (apos != std::string::npos) {
      token.has_apostrophe = true;
      token.stem = token.folded.substr(0, apos);
      const std::string remainder = token.folded.substr(apos + apos_len);
      if (!remainder.empty()) token.suffixes.push_back(remainder);
    } else {
      token.stem = token.folded;
    }
    stream.tokens.push_back(std::move(token));
    i = j;
  }
  return stream;
}

std::pair<std::string, std::vector<std::string>> split_apostrophe(const Token& token,
                                                                  const Lexicon& lexicon) {
  if (!token.has_apostrophe) return {token.stem, {}};
  std::string remainder;
  for (const auto& s : token.suffixes) remainder += s;

  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos < remainder.size()) {
    const std::string_view rest = std::string_view(remainder).substr(pos);
    bool matched = false;
    for (const auto& form : lexicon.suffix_forms()) {  // longest first
      if (rest.size() >= form.size() && rest.substr(0, form.size()) == form) {
        parts.push_back(form);
        pos += form.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      parts.emplace_back(rest);  // opaque tail
      break;
    }
  }
  return {token.stem, std::move(parts)};
}

std::vector<StripCandidate> strip_suffixes(std::string_view folded, const Lexicon& lexicon) {
  // Breadth-first over right-strips so each base keeps the chain with the
  // fewest suffixes. Chains accumulate rightmost-first and are reversed
  // into textual order at the end.
  std::map<std::string, std::vector<std::string>> chains;
  std::vector<std::string> frontier{std::string(folded)};
  chains[frontier.front()] = {};

  for (int depth = 0; depth < 3 && !frontier.empty(); ++depth) {
    std::vector<std::string> next;
    for (const auto& base : frontier) {
      for (const auto& form : lexicon.suffix_forms()) {
        if (base.size() <= form.size()) continue;
        if (base.compare(base.size() - form.size(), form.size(), form) != 0) continue;
        std::string shorter = base.substr(0, base.size() - form.size());
        if (chains.count(shorter)) continue;
        auto chain = chains.at(base);
        chain.push_back(form);
        chains.emplace(shorter, std::move(chain));
        next.push_back(std::move(shorter));
      }
    }
    frontier = std::move(next);
  }

  std::vector<StripCandidate> out;
  for (auto& [base, chain] : chains) {
    if (base != folded && lexicon.classify(base).empty()) continue;
    StripCandidate cand{base, std::move(chain)};
    std::reverse(cand.suffixes.begin(), cand.suffixes.end());
    out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end(), [](const StripCandidate& a, const StripCandidate& b) {
    if (a.base.size() != b.base.size()) return a.base.size() > b.base.size();
    return a.base < b.base;
  });
  return out;
}

}  // namespace zaman
