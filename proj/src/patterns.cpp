#include "patterns.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>
#include <utility>

#include "turkish.hpp"

namespace zaman {

const char* timex_type_name(TimexType type) {
  switch (type) {
    case TimexType::DATE: return "DATE";
    case TimexType::TIME: return "TIME";
    case TimexType::DURATION: return "DURATION";
    case TimexType::SET: return "SET";
  }
  return "DATE";
}

std::optional<TimexType> timex_type_from_name(std::string_view name) {
  if (name == "DATE") return TimexType::DATE;
  if (name == "TIME") return TimexType::TIME;
  if (name == "DURATION") return TimexType::DURATION;
  if (name == "SET") return TimexType::SET;
  return std::nullopt;
}

TimexType type_for_pattern(int pattern) {
  if (pattern >= 1 && pattern <= 7) return TimexType::DATE;
  if (pattern >= 8 && pattern <= 12) return TimexType::TIME;
  if (pattern >= 13 && pattern <= 15) return TimexType::SET;
  if (pattern == 16 || pattern == 17) return TimexType::DURATION;
  throw std::invalid_argument("unknown rule number: " + std::to_string(pattern));
}

namespace {

bool starts_uppercase(std::string_view text) {
  std::size_t pos = 0;
  char32_t cp = 0;
  return utf8::decode(text, pos, cp) && is_turkish_upper(cp);
}

bool int_in_range(const Occurrence& occ, int lo, int hi) {
  const int* v = std::get_if<int>(&occ.value);
  return v != nullptr && *v >= lo && *v <= hi;
}

bool inflected(const Occurrence& occ) {
  return occ.apostrophe || !occ.suffixes.empty();
}

bool bare(const Occurrence& occ) { return !inflected(occ); }

// Trailing locative suffixes accepted by the "<unit>-LOC <count>" set rules.
bool locative_last_suffix(const Occurrence& occ) {
  static const std::array<std::string_view, 6> kLocative = {"da", "de", "ta",
                                                            "te", "nda", "nde"};
  if (occ.suffixes.empty()) return false;
  const std::string& last = occ.suffixes.back();
  return std::find(kLocative.begin(), kLocative.end(), last) != kLocative.end();
}

Binding occ_binding(Role role, const Occurrence& occ) {
  Binding b;
  b.role = role;
  b.cls = occ.cls;
  b.first = occ.first;
  b.last = occ.last;
  b.value = occ.value;
  return b;
}

Binding span_binding(Role role, std::size_t first, std::size_t last) {
  Binding b;
  b.role = role;
  b.first = first;
  b.last = last;
  return b;
}

RawMatch make_match(const MatchContext& ctx, int pattern, std::size_t first,
                    std::size_t last, std::vector<Binding> bindings) {
  RawMatch m;
  m.pattern = pattern;
  m.type = type_for_pattern(pattern);
  m.first = first;
  m.last = last;
  m.begin = ctx.stream().tokens[first].begin;
  m.end = ctx.stream().tokens[last].end;
  m.bindings = std::move(bindings);
  return m;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
           return std::isdigit(c) != 0;
         });
}

int to_int(std::string_view s) {
  int value = 0;
  std::from_chars(s.data(), s.data() + s.size(), value);
  return value;
}

// "D.M.YYYY" / "D/M/YYYY" with one separator kind, day 1..31, month 1..12,
// year 1000..2100. Returns {day, month, year}.
std::optional<std::array<int, 3>> parse_dotted_date(std::string_view stem) {
  char sep = 0;
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < stem.size(); ++i) {
    char c = stem[i];
    if (c == '.' || c == '/') {
      if (sep != 0 && c != sep) return std::nullopt;
      sep = c;
      parts.push_back(stem.substr(begin, i - begin));
      begin = i + 1;
    } else if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
      return std::nullopt;
    }
  }
  parts.push_back(stem.substr(begin));
  if (parts.size() != 3) return std::nullopt;
  if (!all_digits(parts[0]) || parts[0].size() > 2) return std::nullopt;
  if (!all_digits(parts[1]) || parts[1].size() > 2) return std::nullopt;
  if (!all_digits(parts[2]) || parts[2].size() != 4) return std::nullopt;
  int day = to_int(parts[0]);
  int month = to_int(parts[1]);
  int year = to_int(parts[2]);
  if (day < 1 || day > 31 || month < 1 || month > 12) return std::nullopt;
  if (year < 1000 || year > 2100) return std::nullopt;
  return std::array<int, 3>{day, month, year};
}

// "H:MM" / "H.MM", hour 0..24, minute 00..59. Returns {hour, minute}.
std::optional<std::pair<int, int>> parse_clock(std::string_view stem) {
  char sep = 0;
  std::size_t sep_pos = 0;
  for (std::size_t i = 0; i < stem.size(); ++i) {
    char c = stem[i];
    if (c == ':' || c == '.') {
      if (sep != 0) return std::nullopt;
      sep = c;
      sep_pos = i;
    } else if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
      return std::nullopt;
    }
  }
  if (sep == 0) return std::nullopt;
  std::string_view hour_part = stem.substr(0, sep_pos);
  std::string_view minute_part = stem.substr(sep_pos + 1);
  if (!all_digits(hour_part) || hour_part.size() > 2) return std::nullopt;
  if (!all_digits(minute_part) || minute_part.size() != 2) return std::nullopt;
  int hour = to_int(hour_part);
  int minute = to_int(minute_part);
  if (hour > 24 || minute > 59) return std::nullopt;
  return std::make_pair(hour, minute);
}

}  // namespace

MatchContext::MatchContext(const TokenStream& stream, const Lexicon& lexicon,
                           MatchOptions options)
    : stream_(&stream), lexicon_(&lexicon), options_(options) {
  const auto& tokens = stream.tokens;
  readings_.resize(tokens.size());
  occurrences_.resize(tokens.size());

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].has_apostrophe) {
      auto [stem, suffixes] = split_apostrophe(tokens[i], lexicon);
      readings_[i].push_back(BaseForm{std::move(stem), std::move(suffixes), true});
    } else {
      for (StripCandidate& cand : strip_suffixes(tokens[i].folded, lexicon)) {
        readings_[i].push_back(
            BaseForm{std::move(cand.base), std::move(cand.suffixes), false});
      }
    }
  }

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::size_t max_k = std::min(lexicon.max_entry_tokens(), tokens.size() - i);
    std::string prefix;  // folded tokens i..final-1 joined with single spaces
    for (std::size_t k = 1; k <= max_k; ++k) {
      std::size_t final_index = i + k - 1;
      for (const BaseForm& form : readings_[final_index]) {
        std::string surface =
            prefix.empty() ? form.base : prefix + " " + form.base;
        for (const LexiconEntry& entry : lexicon.classify(surface)) {
          if (options_.strict_case &&
              (entry.cls == LexClass::MON || entry.cls == LexClass::DAY) &&
              !starts_uppercase(tokens[i].text)) {
            continue;
          }
          occurrences_[i].push_back(Occurrence{entry.cls, entry.value, i,
                                               final_index, form.apostrophe,
                                               form.suffixes});
        }
      }
      // Inner tokens of a multi-word occurrence must be plain words.
      if (tokens[final_index].has_apostrophe) break;
      prefix = prefix.empty() ? tokens[final_index].folded
                              : prefix + " " + tokens[final_index].folded;
    }
    std::stable_sort(occurrences_[i].begin(), occurrences_[i].end(),
                     [](const Occurrence& a, const Occurrence& b) {
                       if (a.cls != b.cls) return a.cls < b.cls;
                       if (a.last != b.last) return a.last > b.last;
                       return a.suffixes.size() < b.suffixes.size();
                     });
  }
}

const std::vector<Occurrence>& MatchContext::occurrences_at(std::size_t index) const {
  return occurrences_.at(index);
}

const std::vector<BaseForm>& MatchContext::readings_at(std::size_t index) const {
  return readings_.at(index);
}

const Occurrence* MatchContext::find(std::size_t index, LexClass cls) const {
  return find_if(index, cls, [](const Occurrence&) { return true; });
}

const Occurrence* MatchContext::find_if(
    std::size_t index, LexClass cls,
    const std::function<bool(const Occurrence&)>& pred) const {
  if (index >= occurrences_.size()) return nullptr;
  for (const Occurrence& occ : occurrences_[index]) {
    if (occ.cls == cls && pred(occ)) return &occ;
  }
  return nullptr;
}

const BaseForm* MatchContext::literal(std::size_t index, std::string_view word) const {
  if (index >= readings_.size()) return nullptr;
  for (const BaseForm& form : readings_[index]) {
    if (form.base == word) return &form;
  }
  return nullptr;
}

bool MatchContext::bare_literal(std::size_t index, std::string_view word) const {
  return index < stream_->tokens.size() && stream_->tokens[index].folded == word;
}

MatchContext analyze(const TokenStream& stream, const Lexicon& lexicon,
                     MatchOptions options) {
  return MatchContext(stream, lexicon, options);
}

std::optional<Binding> match_year_expr(const MatchContext& ctx, std::size_t start) {
  const Occurrence* num = ctx.find(start, LexClass::NUM);
  if (num == nullptr) return std::nullopt;
  std::size_t pos = num->last + 1;
  const BaseForm* marker = nullptr;
  for (std::string_view word : {"yıl", "sene"}) {
    const BaseForm* reading = ctx.literal(pos, word);
    if (reading != nullptr && !reading->suffixes.empty()) {
      marker = reading;
      break;
    }
  }
  // Without the inflected year word the number alone only reads as a year
  // when it falls in the plausible-year range.
  if (marker == nullptr && !int_in_range(*num, 1000, 2100)) return std::nullopt;
  Binding aux;
  aux.role = Role::AUX;
  aux.aux = AuxKind::YEAR_EXPR;
  aux.first = start;
  aux.last = marker != nullptr ? pos : num->last;
  aux.children.push_back(occ_binding(Role::YEAR, *num));
  if (marker != nullptr) aux.children.push_back(span_binding(Role::LITERAL, pos, pos));
  return aux;
}

std::optional<Binding> match_mon_expr(const MatchContext& ctx, std::size_t start) {
  std::optional<Binding> best;
  if (const Occurrence* mon = ctx.find_if(start, LexClass::MON, inflected)) {
    Binding aux;
    aux.role = Role::AUX;
    aux.aux = AuxKind::MON_EXPR;
    aux.first = start;
    aux.last = mon->last;
    aux.children.push_back(occ_binding(Role::MONTH, *mon));
    best = aux;
  }
  const Occurrence* head = ctx.find_if(
      start, LexClass::ORD, [](const Occurrence& o) { return int_in_range(o, 1, 12); });
  if (head == nullptr) head = ctx.find(start, LexClass::MON);
  if (head != nullptr) {
    std::size_t pos = head->last + 1;
    if (ctx.literal(pos, "ay") != nullptr) {
      Binding aux;
      aux.role = Role::AUX;
      aux.aux = AuxKind::MON_EXPR;
      aux.first = start;
      aux.last = pos;
      aux.children.push_back(occ_binding(Role::MONTH, *head));
      aux.children.push_back(span_binding(Role::LITERAL, pos, pos));
      if (!best || aux.last > best->last) best = aux;
    }
  }
  return best;
}

std::optional<Binding> match_day_expr(const MatchContext& ctx, std::size_t start) {
  std::optional<Binding> best;
  if (const Occurrence* num = ctx.find_if(start, LexClass::NUM, [](const Occurrence& o) {
        return inflected(o) && int_in_range(o, 1, 31);
      })) {
    Binding aux;
    aux.role = Role::AUX;
    aux.aux = AuxKind::DAY_EXPR;
    aux.first = start;
    aux.last = num->last;
    aux.children.push_back(occ_binding(Role::DAY, *num));
    best = aux;
  }
  const Occurrence* head = ctx.find_if(
      start, LexClass::ORD, [](const Occurrence& o) { return int_in_range(o, 1, 31); });
  if (head == nullptr) head = ctx.find(start, LexClass::DAY);
  if (head != nullptr) {
    std::size_t pos = head->last + 1;
    if (ctx.literal(pos, "gün") != nullptr) {
      Binding aux;
      aux.role = Role::AUX;
      aux.aux = AuxKind::DAY_EXPR;
      aux.first = start;
      aux.last = pos;
      Role role = head->cls == LexClass::ORD ? Role::DAY : Role::WEEKDAY;
      aux.children.push_back(occ_binding(role, *head));
      aux.children.push_back(span_binding(Role::LITERAL, pos, pos));
      if (!best || aux.last > best->last) best = aux;
    }
  }
  return best;
}

namespace {

// Rule 1: one token "D.M.YYYY" or "D/M/YYYY".
std::optional<RawMatch> rule1(const MatchContext& ctx, std::size_t start) {
  auto date = parse_dotted_date(ctx.stream().tokens[start].stem);
  if (!date) return std::nullopt;
  Binding day = span_binding(Role::DAY, start, start);
  day.cls = LexClass::NUM;
  day.value = (*date)[0];
  Binding month = span_binding(Role::MONTH, start, start);
  month.cls = LexClass::NUM;
  month.value = (*date)[1];
  Binding year = span_binding(Role::YEAR, start, start);
  year.cls = LexClass::NUM;
  year.value = (*date)[2];
  return make_match(ctx, 1, start, start, {day, month, year});
}

// Rule 2: NUM? MON NUM? DAY? with at least one of the optionals.
std::optional<RawMatch> rule2(const MatchContext& ctx, std::size_t start) {
  std::size_t pos = start;
  std::vector<Binding> bindings;
  bool any_optional = false;
  if (const Occurrence* day = ctx.find_if(pos, LexClass::NUM, [](const Occurrence& o) {
        return int_in_range(o, 1, 31);
      })) {
    bindings.push_back(occ_binding(Role::DAY, *day));
    pos = day->last + 1;
    any_optional = true;
  }
  const Occurrence* mon = ctx.find(pos, LexClass::MON);
  if (mon == nullptr) return std::nullopt;
  bindings.push_back(occ_binding(Role::MONTH, *mon));
  pos = mon->last + 1;
  if (const Occurrence* year = ctx.find_if(pos, LexClass::NUM, [](const Occurrence& o) {
        return int_in_range(o, 1000, 2100);
      })) {
    bindings.push_back(occ_binding(Role::YEAR, *year));
    pos = year->last + 1;
    any_optional = true;
  }
  if (const Occurrence* weekday = ctx.find(pos, LexClass::DAY)) {
    bindings.push_back(occ_binding(Role::WEEKDAY, *weekday));
    pos = weekday->last + 1;
    any_optional = true;
  }
  if (!any_optional) return std::nullopt;
  return make_match(ctx, 2, start, pos - 1, std::move(bindings));
}

// Rule 3: YEAR-EXPR MON-EXPR? DAY-EXPR?.
std::optional<RawMatch> rule3(const MatchContext& ctx, std::size_t start) {
  auto year = match_year_expr(ctx, start);
  if (!year) return std::nullopt;
  std::size_t pos = year->last + 1;
  std::vector<Binding> bindings{*year};
  if (auto mon = match_mon_expr(ctx, pos)) {
    pos = mon->last + 1;
    bindings.push_back(std::move(*mon));
  }
  if (auto day = match_day_expr(ctx, pos)) {
    pos = day->last + 1;
    bindings.push_back(std::move(*day));
  }
  return make_match(ctx, 3, start, pos - 1, std::move(bindings));
}

// Rule 4: YEAR-EXPR NUM MON DAY?.
std::optional<RawMatch> rule4(const MatchContext& ctx, std::size_t start) {
  auto year = match_year_expr(ctx, start);
  if (!year) return std::nullopt;
  std::size_t pos = year->last + 1;
  const Occurrence* day = ctx.find_if(pos, LexClass::NUM, [](const Occurrence& o) {
    return int_in_range(o, 1, 31);
  });
  if (day == nullptr) return std::nullopt;
  pos = day->last + 1;
  const Occurrence* mon = ctx.find(pos, LexClass::MON);
  if (mon == nullptr) return std::nullopt;
  pos = mon->last + 1;
  std::vector<Binding> bindings{*year, occ_binding(Role::DAY, *day),
                                occ_binding(Role::MONTH, *mon)};
  if (const Occurrence* weekday = ctx.find(pos, LexClass::DAY)) {
    bindings.push_back(occ_binding(Role::WEEKDAY, *weekday));
    pos = weekday->last + 1;
  }
  return make_match(ctx, 4, start, pos - 1, std::move(bindings));
}

// Rule 5: MON-EXPR DAY-EXPR?.
std::optional<RawMatch> rule5(const MatchContext& ctx, std::size_t start) {
  auto mon = match_mon_expr(ctx, start);
  if (!mon) return std::nullopt;
  std::size_t pos = mon->last + 1;
  std::vector<Binding> bindings{*mon};
  if (auto day = match_day_expr(ctx, pos)) {
    pos = day->last + 1;
    bindings.push_back(std::move(*day));
  }
  return make_match(ctx, 5, start, pos - 1, std::move(bindings));
}

// Rule 6: MOD? (T_UNIT | DAY | MON | SEAS). A unit needs the modifier and
// must be a calendar unit (day or coarser); the other operands also stand
// alone.
std::optional<RawMatch> rule6(const MatchContext& ctx, std::size_t start) {
  std::size_t pos = start;
  std::optional<Binding> mod;
  if (const Occurrence* m = ctx.find(pos, LexClass::MOD)) {
    mod = occ_binding(Role::MOD, *m);
    pos = m->last + 1;
  }
  const bool has_mod = mod.has_value();
  struct Operand {
    LexClass cls;
    Role role;
  };
  static constexpr std::array<Operand, 4> kOperands = {
      Operand{LexClass::T_UNIT, Role::UNIT}, Operand{LexClass::DAY, Role::WEEKDAY},
      Operand{LexClass::MON, Role::MONTH}, Operand{LexClass::SEAS, Role::SEASON}};
  const Occurrence* best = nullptr;
  Role role = Role::UNIT;
  for (const Operand& op : kOperands) {
    const Occurrence* occ = ctx.find_if(pos, op.cls, [&](const Occurrence& o) {
      if (op.cls != LexClass::T_UNIT) return true;
      if (!has_mod) return false;
      const TimeUnit* unit = std::get_if<TimeUnit>(&o.value);
      return unit != nullptr && *unit >= TimeUnit::DAY;
    });
    if (occ != nullptr && (best == nullptr || occ->last > best->last)) {
      best = occ;
      role = op.role;
    }
  }
  if (best == nullptr) return std::nullopt;
  std::vector<Binding> bindings;
  if (mod) bindings.push_back(std::move(*mod));
  bindings.push_back(occ_binding(role, *best));
  return make_match(ctx, 6, start, best->last, std::move(bindings));
}

// Rule 7: DEIC.
std::optional<RawMatch> rule7(const MatchContext& ctx, std::size_t start) {
  const Occurrence* deic = ctx.find(start, LexClass::DEIC);
  if (deic == nullptr) return std::nullopt;
  return make_match(ctx, 7, start, deic->last, {occ_binding(Role::DEIC, *deic)});
}

// Rule 8: D_PART? "saat"? CLOCK.
std::optional<RawMatch> rule8(const MatchContext& ctx, std::size_t start) {
  std::size_t pos = start;
  std::vector<Binding> bindings;
  if (const Occurrence* part = ctx.find(pos, LexClass::D_PART)) {
    bindings.push_back(occ_binding(Role::DAY_PART, *part));
    pos = part->last + 1;
  }
  if (ctx.bare_literal(pos, "saat")) {
    bindings.push_back(span_binding(Role::LITERAL, pos, pos));
    ++pos;
  }
  if (pos >= ctx.size()) return std::nullopt;
  auto clock = parse_clock(ctx.stream().tokens[pos].stem);
  if (!clock) return std::nullopt;
  Binding hour = span_binding(Role::HOUR, pos, pos);
  hour.value = clock->first;
  Binding minute = span_binding(Role::MINUTE, pos, pos);
  minute.value = clock->second;
  bindings.push_back(hour);
  bindings.push_back(minute);
  return make_match(ctx, 8, start, pos, std::move(bindings));
}

// Rule 9: D_PART? "saat" NUM, hour as a word or plain number.
std::optional<RawMatch> rule9(const MatchContext& ctx, std::size_t start) {
  std::size_t pos = start;
  std::vector<Binding> bindings;
  if (const Occurrence* part = ctx.find(pos, LexClass::D_PART)) {
    bindings.push_back(occ_binding(Role::DAY_PART, *part));
    pos = part->last + 1;
  }
  if (!ctx.bare_literal(pos, "saat")) return std::nullopt;
  bindings.push_back(span_binding(Role::LITERAL, pos, pos));
  ++pos;
  const Occurrence* hour = ctx.find_if(pos, LexClass::NUM, [](const Occurrence& o) {
    return int_in_range(o, 0, 24);
  });
  if (hour == nullptr) return std::nullopt;
  bindings.push_back(occ_binding(Role::HOUR, *hour));
  return make_match(ctx, 9, start, hour->last, std::move(bindings));
}

// Rule 10: DAY? D_PART "saat"+suffixes.
std::optional<RawMatch> rule10(const MatchContext& ctx, std::size_t start) {
  std::size_t pos = start;
  std::vector<Binding> bindings;
  if (const Occurrence* weekday = ctx.find(pos, LexClass::DAY)) {
    bindings.push_back(occ_binding(Role::WEEKDAY, *weekday));
    pos = weekday->last + 1;
  }
  const Occurrence* part = ctx.find(pos, LexClass::D_PART);
  if (part == nullptr) return std::nullopt;
  bindings.push_back(occ_binding(Role::DAY_PART, *part));
  pos = part->last + 1;
  if (ctx.literal(pos, "saat") == nullptr) return std::nullopt;
  bindings.push_back(span_binding(Role::LITERAL, pos, pos));
  return make_match(ctx, 10, start, pos, std::move(bindings));
}

// Rule 11: DAY? D_PART.
std::optional<RawMatch> rule11(const MatchContext& ctx, std::size_t start) {
  std::size_t pos = start;
  std::vector<Binding> bindings;
  if (const Occurrence* weekday = ctx.find(pos, LexClass::DAY)) {
    bindings.push_back(occ_binding(Role::WEEKDAY, *weekday));
    pos = weekday->last + 1;
  }
  const Occurrence* part = ctx.find(pos, LexClass::D_PART);
  if (part == nullptr) return std::nullopt;
  bindings.push_back(occ_binding(Role::DAY_PART, *part));
  return make_match(ctx, 11, start, part->last, std::move(bindings));
}

// Rule 13: DET (T_UNIT | DAY | MON | SEAS).
std::optional<RawMatch> rule13(const MatchContext& ctx, std::size_t start) {
  const Occurrence* det = ctx.find(start, LexClass::DET);
  if (det == nullptr) return std::nullopt;
  std::size_t pos = det->last + 1;
  struct Operand {
    LexClass cls;
    Role role;
  };
  static constexpr std::array<Operand, 4> kOperands = {
      Operand{LexClass::T_UNIT, Role::UNIT}, Operand{LexClass::DAY, Role::WEEKDAY},
      Operand{LexClass::MON, Role::MONTH}, Operand{LexClass::SEAS, Role::SEASON}};
  const Occurrence* best = nullptr;
  Role role = Role::UNIT;
  for (const Operand& op : kOperands) {
    const Occurrence* occ = ctx.find(pos, op.cls);
    if (occ != nullptr && (best == nullptr || occ->last > best->last)) {
      best = occ;
      role = op.role;
    }
  }
  if (best == nullptr) return std::nullopt;
  return make_match(ctx, 13, start, best->last,
                    {occ_binding(Role::DET, *det), occ_binding(role, *best)});
}

// Rule 14: T_UNIT-LOC NUM QUANT? ("haftada iki kez").
std::optional<RawMatch> rule14(const MatchContext& ctx, std::size_t start) {
  const Occurrence* unit = ctx.find_if(start, LexClass::T_UNIT, locative_last_suffix);
  if (unit == nullptr) return std::nullopt;
  std::size_t pos = unit->last + 1;
  const Occurrence* count = ctx.find(pos, LexClass::NUM);
  if (count == nullptr) return std::nullopt;
  pos = count->last + 1;
  std::vector<Binding> bindings{occ_binding(Role::UNIT, *unit),
                                occ_binding(Role::FREQ_COUNT, *count)};
  std::size_t last = count->last;
  if (const Occurrence* quant = ctx.find(pos, LexClass::QUANT)) {
    bindings.push_back(occ_binding(Role::QUANT, *quant));
    last = quant->last;
  }
  return make_match(ctx, 14, start, last, std::move(bindings));
}

// Rule 15: DET? NUM? T_UNIT-LOC NUM QUANT? ("her iki günde bir").
std::optional<RawMatch> rule15(const MatchContext& ctx, std::size_t start) {
  std::size_t pos = start;
  std::vector<Binding> bindings;
  if (const Occurrence* det = ctx.find(pos, LexClass::DET)) {
    bindings.push_back(occ_binding(Role::DET, *det));
    pos = det->last + 1;
  }
  if (const Occurrence* count = ctx.find(pos, LexClass::NUM)) {
    bindings.push_back(occ_binding(Role::COUNT, *count));
    pos = count->last + 1;
  }
  const Occurrence* unit = ctx.find_if(pos, LexClass::T_UNIT, locative_last_suffix);
  if (unit == nullptr) return std::nullopt;
  bindings.push_back(occ_binding(Role::UNIT, *unit));
  pos = unit->last + 1;
  const Occurrence* tail = ctx.find(pos, LexClass::NUM);
  if (tail == nullptr) return std::nullopt;
  bindings.push_back(occ_binding(Role::FREQ_COUNT, *tail));
  pos = tail->last + 1;
  std::size_t last = tail->last;
  if (const Occurrence* quant = ctx.find(pos, LexClass::QUANT)) {
    bindings.push_back(occ_binding(Role::QUANT, *quant));
    last = quant->last;
  }
  return make_match(ctx, 15, start, last, std::move(bindings));
}

// Rule 16: NUM T_UNIT with the unit completely uninflected.
std::optional<RawMatch> rule16(const MatchContext& ctx, std::size_t start) {
  const Occurrence* count = ctx.find(start, LexClass::NUM);
  if (count == nullptr) return std::nullopt;
  const Occurrence* unit = ctx.find_if(count->last + 1, LexClass::T_UNIT, bare);
  if (unit == nullptr) return std::nullopt;
  return make_match(ctx, 16, start, unit->last,
                    {occ_binding(Role::COUNT, *count), occ_binding(Role::UNIT, *unit)});
}

// Rule 17: T_UNIT alone, inflected or not ("yıllar").
std::optional<RawMatch> rule17(const MatchContext& ctx, std::size_t start) {
  const Occurrence* unit = ctx.find(start, LexClass::T_UNIT);
  if (unit == nullptr) return std::nullopt;
  return make_match(ctx, 17, start, unit->last, {occ_binding(Role::UNIT, *unit)});
}

const Binding* find_binding(const RawMatch& match, Role role) {
  for (const Binding& b : match.bindings) {
    if (b.role == role) return &b;
  }
  return nullptr;
}

// A date sub-match a composite may start with: any of rules 1-5, rule 6
// only when it names a weekday, rule 7 only for day-offset deictics.
bool date_composable(const RawMatch& match) {
  switch (match.pattern) {
    case 1:
    case 2:
    case 3:
    case 4:
    case 5:
      return true;
    case 6:
      return find_binding(match, Role::WEEKDAY) != nullptr;
    case 7: {
      const Binding* deic = find_binding(match, Role::DEIC);
      if (deic == nullptr) return false;
      const DeicticRef* ref = std::get_if<DeicticRef>(&deic->value);
      return ref != nullptr && !ref->present_ref;
    }
    default:
      return false;
  }
}

// A time sub-match a composite may end with: clock rules always, the
// day-part rules only when they carry no weekday of their own.
bool time_composable(const RawMatch& match) {
  switch (match.pattern) {
    case 8:
    case 9:
      return true;
    case 10:
    case 11:
      return find_binding(match, Role::WEEKDAY) == nullptr;
    default:
      return false;
  }
}

Binding part_binding(Role role, const RawMatch& part) {
  Binding b;
  b.role = role;
  b.first = part.first;
  b.last = part.last;
  b.children = part.bindings;
  b.sub_pattern = part.pattern;
  return b;
}

// Rule 12: a composable date immediately followed by a composable time.
void add_composites(const MatchContext& ctx, std::vector<RawMatch>& matches) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<RawMatch> composites;
  for (const RawMatch& date : matches) {
    if (!date_composable(date)) continue;
    for (const RawMatch& time : matches) {
      if (time.first != date.last + 1 || !time_composable(time)) continue;
      if (!seen.insert({date.first, time.last}).second) continue;
      composites.push_back(make_match(
          ctx, 12, date.first, time.last,
          {part_binding(Role::DATE_PART, date), part_binding(Role::TIME_PART, time)}));
    }
  }
  matches.insert(matches.end(), std::make_move_iterator(composites.begin()),
                 std::make_move_iterator(composites.end()));
}

}  // namespace

std::vector<RawMatch> scan(const MatchContext& ctx) {
  using Rule = std::optional<RawMatch> (*)(const MatchContext&, std::size_t);
  static constexpr std::array<Rule, 16> kRules = {
      rule1, rule2,  rule3,  rule4,  rule5,  rule6,  rule7,  rule8,
      rule9, rule10, rule11, rule13, rule14, rule15, rule16, rule17};
  std::vector<RawMatch> out;
  for (std::size_t start = 0; start < ctx.size(); ++start) {
    for (Rule rule : kRules) {
      if (auto match = rule(ctx, start)) out.push_back(std::move(*match));
    }
  }
  add_composites(ctx, out);
  std::stable_sort(out.begin(), out.end(), [](const RawMatch& a, const RawMatch& b) {
    if (a.first != b.first) return a.first < b.first;
    if (a.last != b.last) return a.last > b.last;
    return a.pattern < b.pattern;
  });
  return out;
}

std::vector<RawMatch> scan(const TokenStream& stream, const Lexicon& lexicon,
                           const MatchOptions& options) {
  return scan(analyze(stream, lexicon, options));
}

namespace {

int type_rank(TimexType type) {
  switch (type) {
    case TimexType::TIME: return 0;
    case TimexType::SET: return 1;
    case TimexType::DATE: return 2;
    case TimexType::DURATION: return 3;
  }
  return 3;
}

}  // namespace

std::vector<RawMatch> resolve(std::vector<RawMatch> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const RawMatch& a, const RawMatch& b) {
                     if (a.first != b.first) return a.first < b.first;
                     if (a.last != b.last) return a.last > b.last;
                     if (type_rank(a.type) != type_rank(b.type)) {
                       return type_rank(a.type) < type_rank(b.type);
                     }
                     return a.pattern < b.pattern;
                   });
  std::vector<RawMatch> accepted;
  for (RawMatch& candidate : candidates) {
    bool clashes = std::any_of(accepted.begin(), accepted.end(),
                               [&](const RawMatch& a) {
                                 return a.first <= candidate.last &&
                                        candidate.first <= a.last;
                               });
    if (!clashes) accepted.push_back(std::move(candidate));
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const RawMatch& a, const RawMatch& b) { return a.first < b.first; });
  return accepted;
}

}  // namespace zaman
