#include "normalize.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <regex>
#include <stdexcept>

#include "errors.hpp"

namespace zaman {

namespace {

std::string pad(int value, int width) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%0*d", width, value);
  return buf;
}

std::chrono::sys_days to_days(const ReferenceDate& ref) {
  return std::chrono::sys_days{std::chrono::year{ref.year} /
                               std::chrono::month{static_cast<unsigned>(ref.month)} /
                               std::chrono::day{static_cast<unsigned>(ref.day)}};
}

ReferenceDate from_days(std::chrono::sys_days days) {
  std::chrono::year_month_day ymd{days};
  return ReferenceDate{static_cast<int>(ymd.year()),
                       static_cast<int>(static_cast<unsigned>(ymd.month())),
                       static_cast<int>(static_cast<unsigned>(ymd.day()))};
}

std::string full_date(const ReferenceDate& d) {
  return pad(d.year, 4) + "-" + pad(d.month, 2) + "-" + pad(d.day, 2);
}

// ISO-8601 week: the week containing this date's Thursday, numbered within
// the year that Thursday falls in.
std::pair<int, int> iso_week(std::chrono::sys_days date) {
  std::chrono::weekday wd{date};
  std::chrono::sys_days thursday =
      date + std::chrono::days{4 - static_cast<int>(wd.iso_encoding())};
  std::chrono::year_month_day t{thursday};
  std::chrono::sys_days jan1{t.year() / std::chrono::January / 1};
  int week = static_cast<int>((thursday - jan1).count()) / 7 + 1;
  return {static_cast<int>(t.year()), week};
}

const Binding* find_role(const std::vector<Binding>& bindings, Role role) {
  for (const Binding& b : bindings) {
    if (b.role == role) return &b;
    if (const Binding* nested = find_role(b.children, role)) return nested;
  }
  return nullptr;
}

std::optional<int> role_int(const std::vector<Binding>& bindings, Role role) {
  const Binding* b = find_role(bindings, role);
  if (b == nullptr) return std::nullopt;
  if (const int* v = std::get_if<int>(&b->value)) return *v;
  return std::nullopt;
}

void note_no_ref(std::vector<std::string>* diagnostics, std::string_view text,
                 std::string_view value) {
  if (diagnostics != nullptr) {
    diagnostics->push_back("no reference date: \"" + std::string(text) +
                           "\" normalized to " + std::string(value));
  }
}

int season_start_month(Season s) {
  switch (s) {
    case Season::SP: return 3;
    case Season::SU: return 6;
    case Season::FA: return 9;
    case Season::WI: return 12;
  }
  return 3;
}

int season_ordinal(Season s) {
  switch (s) {
    case Season::SP: return 0;
    case Season::SU: return 1;
    case Season::FA: return 2;
    case Season::WI: return 3;
  }
  return 0;
}

Season season_from_ordinal(int ordinal) {
  switch (ordinal) {
    case 0: return Season::SP;
    case 1: return Season::SU;
    case 2: return Season::FA;
    default: return Season::WI;
  }
}

// The season instance containing the reference day; winter belongs to the
// year of its December.
std::pair<Season, int> season_of(const ReferenceDate& ref) {
  int m = ref.month;
  if (m >= 3 && m <= 5) return {Season::SP, ref.year};
  if (m >= 6 && m <= 8) return {Season::SU, ref.year};
  if (m >= 9 && m <= 11) return {Season::FA, ref.year};
  return {Season::WI, m == 12 ? ref.year : ref.year - 1};
}

// Dates assembled from explicit fields (rules 1-5): missing leading fields
// become wildcards, a missing month between a year and a day becomes "XX",
// and the weekday is informative only once any numeric field is known.
std::string build_date(std::optional<int> year, std::optional<int> month,
                       std::optional<int> day, std::optional<int> weekday) {
  if (!year && !month && !day) {
    if (weekday) return weekday_value(*weekday);
    throw std::invalid_argument("date match bound no fields");
  }
  std::string out = year ? pad(*year, 4) : "XXXX";
  if (month) {
    out += "-" + pad(*month, 2);
    if (day) out += "-" + pad(*day, 2);
  } else if (day) {
    out += "-XX-" + pad(*day, 2);
  }
  return out;
}

std::string plain_date_value(const RawMatch& match) {
  return build_date(role_int(match.bindings, Role::YEAR),
                    role_int(match.bindings, Role::MONTH),
                    role_int(match.bindings, Role::DAY),
                    role_int(match.bindings, Role::WEEKDAY));
}

// Rule 6: MOD? (unit | weekday | month | season).
std::string shifted_value(const RawMatch& match, std::string_view text,
                          const std::optional<ReferenceDate>& ref,
                          std::vector<std::string>* diagnostics) {
  const Binding* mod = find_role(match.bindings, Role::MOD);
  const Binding* unit_b = find_role(match.bindings, Role::UNIT);
  const Binding* season_b = find_role(match.bindings, Role::SEASON);
  std::optional<int> weekday = role_int(match.bindings, Role::WEEKDAY);
  std::optional<int> month = role_int(match.bindings, Role::MONTH);

  if (mod == nullptr) {
    if (weekday) return weekday_value(*weekday);
    if (month) return "XXXX-" + pad(*month, 2);
    if (season_b != nullptr) {
      return std::string("XXXX-") + season_code(std::get<Season>(season_b->value));
    }
    throw std::invalid_argument("bare unit reached the date shifter");
  }
  int delta = std::get<int>(mod->value);

  if (unit_b != nullptr) {
    TimeUnit unit = std::get<TimeUnit>(unit_b->value);
    if (!ref) {
      std::string value;
      switch (unit) {
        case TimeUnit::YEAR: value = "XXXX"; break;
        case TimeUnit::MONTH: value = "XXXX-XX"; break;
        case TimeUnit::WEEK: value = "XXXX-WXX"; break;
        case TimeUnit::DAY: value = "XXXX-XX-XX"; break;
        default: value = "XXXX"; break;  // season / century of an unknown day
      }
      note_no_ref(diagnostics, text, value);
      return value;
    }
    switch (unit) {
      case TimeUnit::YEAR:
        return pad(ref->year + delta, 4);
      case TimeUnit::MONTH: {
        int total = ref->year * 12 + (ref->month - 1) + delta;
        return pad(total / 12, 4) + "-" + pad(total % 12 + 1, 2);
      }
      case TimeUnit::WEEK: {
        auto [iso_year, week] = iso_week(to_days(*ref) + std::chrono::days{7 * delta});
        return pad(iso_year, 4) + "-W" + pad(week, 2);
      }
      case TimeUnit::DAY:
        return full_date(from_days(to_days(*ref) + std::chrono::days{delta}));
      case TimeUnit::SEASON: {
        auto [season, year] = season_of(*ref);
        int index = year * 4 + season_ordinal(season) + delta;
        return pad(index / 4, 4) + "-" + season_code(season_from_ordinal(index % 4));
      }
      case TimeUnit::CENTURY:
        return pad(ref->year / 100 + delta, 2) + "XX";
      default:
        throw std::invalid_argument("sub-day unit reached the date shifter");
    }
  }

  if (weekday) {
    if (!ref) {
      std::string value = weekday_value(*weekday);
      note_no_ref(diagnostics, text, value);
      return value;
    }
    // Most recent instance on or before the reference day; "last" skips a
    // week only when that instance is today, "next" always moves forward.
    int back = (ref->iso_weekday() - *weekday + 7) % 7;
    std::chrono::sys_days anchor = to_days(*ref) - std::chrono::days{back};
    std::chrono::sys_days result =
        delta < 0 ? (back == 0 ? anchor - std::chrono::days{7} : anchor)
                  : anchor + std::chrono::days{7};
    return full_date(from_days(result));
  }

  if (month) {
    if (!ref) {
      std::string value = "XXXX-" + pad(*month, 2);
      note_no_ref(diagnostics, text, value);
      return value;
    }
    // Same scheme one level up: anchor at the most recent instance that
    // has started, step back past a current instance, step forward always.
    int anchor = ref->month >= *month ? ref->year : ref->year - 1;
    bool inside = ref->month == *month;
    int year = delta < 0 ? (inside ? anchor - 1 : anchor) : anchor + 1;
    return pad(year, 4) + "-" + pad(*month, 2);
  }

  if (season_b != nullptr) {
    Season season = std::get<Season>(season_b->value);
    const char* code = season_code(season);
    if (!ref) {
      std::string value = std::string("XXXX-") + code;
      note_no_ref(diagnostics, text, value);
      return value;
    }
    int start = season_start_month(season);
    int anchor = ref->month >= start ? ref->year : ref->year - 1;
    int ref_index = ref->year * 12 + ref->month - 1;
    bool inside = ref_index < anchor * 12 + start - 1 + 3;
    int year = delta < 0 ? (inside ? anchor - 1 : anchor) : anchor + 1;
    return pad(year, 4) + "-" + code;
  }

  throw std::invalid_argument("modifier without operand");
}

// Rule 7: deictic day references.
std::string deictic_value(const RawMatch& match, std::string_view text,
                          const std::optional<ReferenceDate>& ref,
                          std::vector<std::string>* diagnostics) {
  const Binding* deic = find_role(match.bindings, Role::DEIC);
  if (deic == nullptr) throw std::invalid_argument("deictic match without binding");
  DeicticRef target = std::get<DeicticRef>(deic->value);
  if (target.present_ref) return "PRESENT_REF";
  if (!ref) {
    note_no_ref(diagnostics, text, "XXXX-XX-XX");
    return "XXXX-XX-XX";
  }
  return full_date(from_days(to_days(*ref) + std::chrono::days{target.day_offset}));
}

std::string date_value(const RawMatch& match, std::string_view text,
                       const std::optional<ReferenceDate>& ref,
                       std::vector<std::string>* diagnostics) {
  switch (match.pattern) {
    case 6:
      return shifted_value(match, text, ref, diagnostics);
    case 7:
      return deictic_value(match, text, ref, diagnostics);
    default:
      return plain_date_value(match);
  }
}

// Rules 8-11: clock times shift evening/night hours into the second half
// of the day; bare day parts become TMO-style codes, prefixed with the
// weekday when one was matched.
std::string time_value(const RawMatch& match) {
  std::optional<int> weekday = role_int(match.bindings, Role::WEEKDAY);
  const Binding* part_b = find_role(match.bindings, Role::DAY_PART);
  std::optional<int> hour = role_int(match.bindings, Role::HOUR);
  std::optional<int> minute = role_int(match.bindings, Role::MINUTE);

  if (hour) {
    int h = *hour;
    if (part_b != nullptr) {
      DayPart part = std::get<DayPart>(part_b->value);
      if ((part == DayPart::EV || part == DayPart::NI) && h <= 11) h += 12;
    }
    return "T" + pad(h, 2) + ":" + pad(minute.value_or(0), 2);
  }
  if (part_b == nullptr) throw std::invalid_argument("time match bound no fields");
  std::string code = std::string("T") + day_part_code(std::get<DayPart>(part_b->value));
  return weekday ? weekday_value(*weekday) + code : code;
}

RawMatch part_to_match(const Binding& part, const TokenStream& stream) {
  RawMatch m;
  m.pattern = part.sub_pattern;
  m.type = type_for_pattern(part.sub_pattern);
  m.first = part.first;
  m.last = part.last;
  m.begin = stream.tokens[part.first].begin;
  m.end = stream.tokens[part.last].end;
  m.bindings = part.children;
  return m;
}

}  // namespace

ReferenceDate ReferenceDate::parse(std::string_view iso) {
  auto bad = [&]() -> void {
    throw input_error("invalid reference date (want YYYY-MM-DD): " + std::string(iso));
  };
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') bad();
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
    if (std::isdigit(static_cast<unsigned char>(iso[i])) == 0) bad();
  }
  auto field = [&](std::size_t pos, std::size_t len) {
    int value = 0;
    std::from_chars(iso.data() + pos, iso.data() + pos + len, value);
    return value;
  };
  ReferenceDate ref{field(0, 4), field(5, 2), field(8, 2)};
  std::chrono::year_month_day ymd{std::chrono::year{ref.year} /
                                  std::chrono::month{static_cast<unsigned>(ref.month)} /
                                  std::chrono::day{static_cast<unsigned>(ref.day)}};
  if (!ymd.ok()) bad();
  return ref;
}

int ReferenceDate::iso_weekday() const {
  std::chrono::weekday wd{to_days(*this)};
  return static_cast<int>(wd.iso_encoding());
}

std::string weekday_value(int weekday) {
  return "XXXX-WXX-" + std::to_string(weekday);
}

std::string period_value(std::optional<int> count, TimeUnit unit) {
  const char* code = "D";
  bool clock = false;
  switch (unit) {
    case TimeUnit::SECOND: code = "S"; clock = true; break;
    case TimeUnit::MINUTE: code = "M"; clock = true; break;
    case TimeUnit::HOUR: code = "H"; clock = true; break;
    case TimeUnit::DAY: code = "D"; break;
    case TimeUnit::WEEK: code = "W"; break;
    case TimeUnit::MONTH: code = "M"; break;
    case TimeUnit::YEAR: code = "Y"; break;
    case TimeUnit::SEASON: code = "SE"; break;
    case TimeUnit::CENTURY: code = "CE"; break;
  }
  std::string out = clock ? "PT" : "P";
  out += count ? std::to_string(*count) : "X";
  return out + code;
}

Timex3 normalize(const RawMatch& match, const TokenStream& stream,
                 const std::optional<ReferenceDate>& ref,
                 std::vector<std::string>* diagnostics) {
  Timex3 out;
  out.type = match.type;
  out.begin = match.begin;
  out.end = match.end;
  out.text = stream.source.substr(match.begin, match.end - match.begin);
  out.pattern = match.pattern;

  switch (match.pattern) {
    case 1:
    case 2:
    case 3:
    case 4:
    case 5:
    case 6:
    case 7:
      out.value = date_value(match, out.text, ref, diagnostics);
      break;
    case 8:
    case 9:
    case 10:
    case 11:
      out.value = time_value(match);
      break;
    case 12: {
      const Binding* date_part = find_role(match.bindings, Role::DATE_PART);
      const Binding* time_part = find_role(match.bindings, Role::TIME_PART);
      if (date_part == nullptr || time_part == nullptr) {
        throw std::invalid_argument("composite match is missing a part");
      }
      RawMatch date_m = part_to_match(*date_part, stream);
      RawMatch time_m = part_to_match(*time_part, stream);
      std::string date_text =
          stream.source.substr(date_m.begin, date_m.end - date_m.begin);
      out.value = date_value(date_m, date_text, ref, diagnostics) + time_value(time_m);
      break;
    }
    case 13: {
      out.quant = "EVERY";
      const Binding* unit_b = find_role(match.bindings, Role::UNIT);
      const Binding* season_b = find_role(match.bindings, Role::SEASON);
      std::optional<int> weekday = role_int(match.bindings, Role::WEEKDAY);
      std::optional<int> month = role_int(match.bindings, Role::MONTH);
      if (unit_b != nullptr) {
        out.value = period_value(1, std::get<TimeUnit>(unit_b->value));
      } else if (weekday) {
        out.value = weekday_value(*weekday);
      } else if (month) {
        out.value = "XXXX-" + pad(*month, 2);
      } else if (season_b != nullptr) {
        out.value =
            std::string("XXXX-") + season_code(std::get<Season>(season_b->value));
      } else {
        throw std::invalid_argument("set match bound no operand");
      }
      break;
    }
    case 14: {
      const Binding* unit_b = find_role(match.bindings, Role::UNIT);
      std::optional<int> count = role_int(match.bindings, Role::FREQ_COUNT);
      if (unit_b == nullptr || !count) {
        throw std::invalid_argument("frequency match is missing a field");
      }
      out.value = period_value(1, std::get<TimeUnit>(unit_b->value));
      out.freq = std::to_string(*count) + "X";
      break;
    }
    case 15: {
      const Binding* unit_b = find_role(match.bindings, Role::UNIT);
      if (unit_b == nullptr) throw std::invalid_argument("set match without a unit");
      std::optional<int> count = role_int(match.bindings, Role::COUNT);
      out.value = period_value(count.value_or(1), std::get<TimeUnit>(unit_b->value));
      if (find_role(match.bindings, Role::DET) != nullptr) out.quant = "EVERY";
      break;
    }
    case 16: {
      const Binding* unit_b = find_role(match.bindings, Role::UNIT);
      std::optional<int> count = role_int(match.bindings, Role::COUNT);
      if (unit_b == nullptr || !count) {
        throw std::invalid_argument("duration match is missing a field");
      }
      out.value = period_value(*count, std::get<TimeUnit>(unit_b->value));
      break;
    }
    case 17: {
      const Binding* unit_b = find_role(match.bindings, Role::UNIT);
      if (unit_b == nullptr) throw std::invalid_argument("duration match without a unit");
      out.value = period_value(std::nullopt, std::get<TimeUnit>(unit_b->value));
      break;
    }
    default:
      throw std::invalid_argument("unknown rule number: " + std::to_string(match.pattern));
  }
  return out;
}

bool value_matches_grammar(std::string_view value) {
  static const std::regex grammar = [] {
    const std::string date =
        "[0-9X]{4}(-(SP|SU|FA|WI|W[0-9X]{2}(-[1-7])?|[0-9X]{2}(-[0-9X]{2})?))?";
    const std::string time = "T([0-9]{2}:[0-9]{2}|MO|AF|EV|NI|DT)";
    return std::regex("PRESENT_REF|PT([0-9]+|X)[HMS]|P([0-9]+|X)(D|W|M|Y|SE|CE)|" +
                      date + "(" + time + ")?|" + time);
  }();
  return std::regex_match(value.begin(), value.end(), grammar);
}

}  // namespace zaman
