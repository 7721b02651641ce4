#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexicon.hpp"
#include "tokenizer.hpp"

namespace zaman {

enum class TimexType { DATE, TIME, DURATION, SET };

const char* timex_type_name(TimexType type);
std::optional<TimexType> timex_type_from_name(std::string_view name);

// The TIMEX3 type every rule produces. Composites (rule 12) count as TIME.
TimexType type_for_pattern(int pattern);

// The three reusable sub-expressions shared by the year/month/day rules.
enum class AuxKind { YEAR_EXPR, MON_EXPR, DAY_EXPR };

// What a matched element contributes to normalization.
enum class Role {
  DAY,         // day of month, 1..31
  MONTH,       // 1..12
  YEAR,        // 1..2100
  WEEKDAY,     // 1..7, Monday = 1
  SEASON,      // Season
  HOUR,        // 0..24
  MINUTE,      // 0..59
  DAY_PART,    // DayPart
  UNIT,        // TimeUnit
  COUNT,       // leading multiplier of a duration/set period
  FREQ_COUNT,  // trailing count of a set ("iki kez" -> 2)
  MOD,         // +1 / -1 shift
  DEIC,        // deictic reference
  DET,         // universal determiner
  QUANT,       // quantifier word
  LITERAL,     // fixed word required by the rule ("saat", "ay", ...)
  AUX,         // nested year/month/day sub-expression
  DATE_PART,   // nested date sub-match of a composite
  TIME_PART,   // nested time sub-match of a composite
};

struct Binding {
  Role role;
  std::optional<LexClass> cls;
  std::optional<AuxKind> aux;
  std::size_t first = 0;  // token index span, inclusive
  std::size_t last = 0;
  CanonicalValue value;
  std::vector<Binding> children;  // AUX / DATE_PART / TIME_PART members
  int sub_pattern = 0;            // rule of a nested composite part
};

struct RawMatch {
  int pattern = 0;
  TimexType type = TimexType::DATE;
  std::size_t first = 0;  // token index span, inclusive
  std::size_t last = 0;
  std::size_t begin = 0;  // byte span, half-open
  std::size_t end = 0;
  std::vector<Binding> bindings;
};

struct MatchOptions {
  // Require months and weekdays to be capitalized in the source text.
  bool strict_case = false;
};

// One way a lexicon class can occur at a token position: possibly over
// several tokens (multi-word entries) and possibly under inflection
// (apostrophe suffixes or stripped fused suffixes on the final token).
struct Occurrence {
  LexClass cls;
  CanonicalValue value;
  std::size_t first = 0;  // token index span, inclusive
  std::size_t last = 0;
  bool apostrophe = false;
  std::vector<std::string> suffixes;  // textual order
};

// One reading of a single token: a base form plus trailing suffixes.
struct BaseForm {
  std::string base;
  std::vector<std::string> suffixes;
  bool apostrophe = false;
};

// Token stream annotated with, per starting position, every lexicon-class
// occurrence beginning there. Built once, shared by all rule matchers.
class MatchContext {
 public:
  MatchContext(const TokenStream& stream, const Lexicon& lexicon, MatchOptions options);

  const TokenStream& stream() const { return *stream_; }
  const Lexicon& lexicon() const { return *lexicon_; }
  const MatchOptions& options() const { return options_; }
  std::size_t size() const { return stream_->tokens.size(); }

  const std::vector<Occurrence>& occurrences_at(std::size_t index) const;
  const std::vector<BaseForm>& readings_at(std::size_t index) const;

  // Longest occurrence of cls starting at index, optionally filtered;
  // ties prefer fewer suffixes. Null when none matches.
  const Occurrence* find(std::size_t index, LexClass cls) const;
  const Occurrence* find_if(std::size_t index, LexClass cls,
                            const std::function<bool(const Occurrence&)>& pred) const;

  // Token index reads as `word` with arbitrary trailing suffixes
  // (returns the reading) / with no suffixes at all.
  const BaseForm* literal(std::size_t index, std::string_view word) const;
  bool bare_literal(std::size_t index, std::string_view word) const;

 private:
  const TokenStream* stream_;
  const Lexicon* lexicon_;
  MatchOptions options_;
  std::vector<std::vector<Occurrence>> occurrences_;  // indexed by first token
  std::vector<std::vector<BaseForm>> readings_;       // indexed by token
};

MatchContext analyze(const TokenStream& stream, const Lexicon& lexicon,
                     MatchOptions options = {});

// Year/month/day sub-expressions. Each returns the longest alternative
// as an AUX binding whose children carry the resolved roles.
std::optional<Binding> match_year_expr(const MatchContext& ctx, std::size_t start);
std::optional<Binding> match_mon_expr(const MatchContext& ctx, std::size_t start);
std::optional<Binding> match_day_expr(const MatchContext& ctx, std::size_t start);

// All rule matches over the stream: for every rule and starting token the
// greedy (maximal-munch) match if any, plus adjacency composites, ordered
// by (first ascending, length descending, rule number ascending).
std::vector<RawMatch> scan(const MatchContext& ctx);
std::vector<RawMatch> scan(const TokenStream& stream, const Lexicon& lexicon,
                           const MatchOptions& options = {});

// Leftmost-longest selection over scan output: candidates are ranked by
// (first ascending, last descending, TIME > SET > DATE > DURATION, rule
// number ascending) and accepted greedily when they overlap nothing
// already accepted. Output is in textual order.
std::vector<RawMatch> resolve(std::vector<RawMatch> candidates);

}  // namespace zaman
