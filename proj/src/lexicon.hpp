#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace zaman {

// Word classes used by the pattern grammar. SUF entries feed apostrophe
// splitting and suffix stripping; APST marks an in-token apostrophe and
// never owns lexicon entries itself.
enum class LexClass {
  NUM,
  ORD,
  DAY,
  MON,
  SEAS,
  D_PART,
  T_UNIT,
  MOD,
  DEIC,
  DET,
  QUANT,
  SUF,
  APST,
};

const char* lex_class_name(LexClass cls);
std::optional<LexClass> lex_class_from_name(std::string_view name);

enum class Season { SP, SU, FA, WI };
enum class DayPart { MO, AF, EV, NI, DT };
enum class TimeUnit { SECOND, MINUTE, HOUR, DAY, WEEK, MONTH, YEAR, SEASON, CENTURY };

const char* season_code(Season s);
const char* day_part_code(DayPart p);

// Deictic anchor: either the symbolic present moment or a whole-day offset
// from the reference date (dün = -1, bugün = 0, yarın = +1, ...).
struct DeicticRef {
  bool present_ref = false;
  int day_offset = 0;
  friend bool operator==(const DeicticRef&, const DeicticRef&) = default;
};

// Per-class payload. `int` carries NUM/ORD values (1..2100), weekday numbers
// (Monday = 1 .. Sunday = 7), month numbers (1..12) and MOD directions (+1 or
// -1); monostate marks the valueless classes (DET, QUANT, SUF, APST).
using CanonicalValue =
    std::variant<std::monostate, int, Season, DayPart, TimeUnit, DeicticRef>;

struct LexiconEntry {
  std::string surface;  // folded form; multi-word surfaces use single spaces
  LexClass cls;
  CanonicalValue value;

  bool multiword() const { return surface.find(' ') != std::string::npos; }
  int token_count() const;
  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

// Compositional Turkish numerals for [lo, hi] (1 <= lo <= hi <= 2100): the
// word form ("yirmi üç") and the digit form ("23") of every value.
std::vector<LexiconEntry> generate_number_words(int lo, int hi);

// Ordinals for the same range: word form ("yirmi üçüncü") and the
// digit-with-period form ("23.").
std::vector<LexiconEntry> generate_ordinals(int lo, int hi);

// Building blocks of the generators, exposed for direct testing.
std::string number_to_words(int n);
std::string ordinal_to_words(int n);

class Lexicon {
 public:
  // Generated numeral/ordinal entries plus the built-in word table
  // (weekdays, months, seasons, day parts, units, modifiers, deictics,
  // determiner, quantifiers, suffix forms).
  static Lexicon defaults();

  // Generated entries plus the entries of `path`; `overrides` entries are
  // loaded last. Later sources shadow earlier ones on (surface, class)
  // collisions; a duplicate (surface, class) inside one file is an error.
  static Lexicon load(const std::string& path,
                      const std::optional<std::string>& overrides = std::nullopt);

  // Defaults plus an optional override file on top.
  static Lexicon defaults_with_overrides(const std::optional<std::string>& overrides);

  // Parses TSV content (CLASS<TAB>surface<TAB>canonical, full-line #
  // comments) into this lexicon. `source` names the input in errors.
  void add_tsv(std::string_view content, const std::string& source);

  void add_entry(LexiconEntry entry);

  // All entries whose surface equals `folded` (pre-folded by the caller),
  // ordered by class tag. All-digit strings classify as NUM and all-digit
  // strings with a trailing period as ORD, both for values in [1, 2100];
  // this also admits leading-zero spellings ("03") that the generated
  // surface table does not store.
  std::vector<LexiconEntry> classify(std::string_view folded) const;

  bool has_suffix(std::string_view form) const;
  // Suffix forms ordered longest first (ties broken lexicographically).
  const std::vector<std::string>& suffix_forms() const { return suffix_forms_; }

  // Longest multi-word surface, measured in tokens.
  std::size_t max_entry_tokens() const { return max_entry_tokens_; }
  std::size_t entry_count() const { return entry_count_; }

 private:
  std::unordered_map<std::string, std::vector<LexiconEntry>> by_surface_;
  std::vector<std::string> suffix_forms_;
  std::size_t max_entry_tokens_ = 1;
  std::size_t entry_count_ = 0;
};

// The built-in word table as lexicon TSV text; data/lexicon.tsv ships the
// same content as a starting point for user override files.
std::string_view builtin_lexicon_tsv();

}  // namespace zaman
