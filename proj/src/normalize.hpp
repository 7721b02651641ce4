#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "patterns.hpp"
#include "tokenizer.hpp"

namespace zaman {

// A calendar day used as the anchor for deictic and shifted expressions.
struct ReferenceDate {
  int year = 0;
  int month = 0;
  int day = 0;

  // Strict "YYYY-MM-DD"; the date must exist. Throws input_error.
  static ReferenceDate parse(std::string_view iso);

  int iso_weekday() const;  // 1 = Monday .. 7 = Sunday

  friend bool operator==(const ReferenceDate&, const ReferenceDate&) = default;
};

// A normalized annotation: TIMEX3 attributes plus the source span.
struct Timex3 {
  TimexType type = TimexType::DATE;
  std::string value;
  std::optional<std::string> quant;
  std::optional<std::string> freq;
  std::size_t begin = 0;  // byte span, half-open
  std::size_t end = 0;
  std::string text;  // source slice [begin, end)
  int pattern = 0;   // rule that produced the match
};

// Computes the TIMEX3 attributes of one match. Expressions that need the
// reference date fall back to wildcard values when none is given; each such
// fallback appends a note to *diagnostics when provided.
Timex3 normalize(const RawMatch& match, const TokenStream& stream,
                 const std::optional<ReferenceDate>& ref,
                 std::vector<std::string>* diagnostics = nullptr);

// The closed shape every emitted value has: PRESENT_REF, a period
// (P2D, PXY, PT1H, ...), a date (2015-03-23, XXXX-03, 2014-FA, 2015-W13,
// XXXX-WXX-1, ...), a time of day (T14:00, TMO, ...), or a date followed
// by a time.
bool value_matches_grammar(std::string_view value);

// "XXXX-WXX-<d>" for an ISO weekday 1..7.
std::string weekday_value(int weekday);

// "P<count><unit>" / "PT<count><unit>" for clock units; X when the count
// is unknown.
std::string period_value(std::optional<int> count, TimeUnit unit);

}  // namespace zaman
