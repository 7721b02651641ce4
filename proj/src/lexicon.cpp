#include "lexicon.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "turkish.hpp"

namespace zaman {

namespace {

struct ClassName {
  LexClass cls;
  const char* name;
};

constexpr ClassName kClassNames[] = {
    {LexClass::NUM, "NUM"},       {LexClass::ORD, "ORD"},
    {LexClass::DAY, "DAY"},       {LexClass::MON, "MON"},
    {LexClass::SEAS, "SEAS"},     {LexClass::D_PART, "D_PART"},
    {LexClass::T_UNIT, "T_UNIT"}, {LexClass::MOD, "MOD"},
    {LexClass::DEIC, "DEIC"},     {LexClass::DET, "DET"},
    {LexClass::QUANT, "QUANT"},   {LexClass::SUF, "SUF"},
    {LexClass::APST, "APST"},
};

const char* kUnits[] = {"",     "bir",  "iki",  "üç",    "dört",
                        "beş",  "altı", "yedi", "sekiz", "dokuz"};
const char* kTens[] = {"",     "on",     "yirmi",  "otuz",   "kırk",
                       "elli", "altmış", "yetmiş", "seksen", "doksan"};

bool is_vowel(char32_t cp) {
  switch (cp) {
    case U'a': case U'e': case U'o': case U'u': case U'i':
    case U'ı':  // ı
    case U'ö':  // ö
    case U'ü':  // ü
      return true;
    default:
      return false;
  }
}

// Four-way vowel harmony target for the ordinal suffix.
char32_t harmony_vowel(char32_t cp) {
  switch (cp) {
    case U'a': case U'ı': return U'ı';
    case U'e': case U'i': return U'i';
    case U'o': case U'u': return U'u';
    default: return U'ü';  // ö, ü
  }
}

std::vector<char32_t> decode_all(std::string_view s) {
  std::vector<char32_t> cps;
  std::size_t pos = 0;
  char32_t cp;
  while (pos < s.size()) {
    const bool ok = utf8::decode(s, pos, cp);
    assert(ok);
    (void)ok;
    cps.push_back(cp);
  }
  return cps;
}

bool all_ascii_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (!s.empty() && (s.front() == '+')) begin++;  // from_chars rejects '+'
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
  throw parse_error(source + ":" + std::to_string(line) + ": " + what);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot read lexicon file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

const char* lex_class_name(LexClass cls) {
  for (const auto& entry : kClassNames) {
    if (entry.cls == cls) return entry.name;
  }
  return "?";
}

std::optional<LexClass> lex_class_from_name(std::string_view name) {
  for (const auto& entry : kClassNames) {
    if (name == entry.name) return entry.cls;
  }
  return std::nullopt;
}

const char* season_code(Season s) {
  switch (s) {
    case Season::SP: return "SP";
    case Season::SU: return "SU";
    case Season::FA: return "FA";
    case Season::WI: return "WI";
  }
  return "?";
}

const char* day_part_code(DayPart p) {
  switch (p) {
    case DayPart::MO: return "MO";
    case DayPart::AF: return "AF";
    case DayPart::EV: return "EV";
    case DayPart::NI: return "NI";
    case DayPart::DT: return "DT";
  }
  return "?";
}

int LexiconEntry::token_count() const {
  return 1 + static_cast<int>(std::count(surface.begin(), surface.end(), ' '));
}

std::string number_to_words(int n) {
  if (n < 1 || n > 2100) throw std::invalid_argument("number_to_words: out of range");
  std::vector<std::string> parts;
  const int thousands = n / 1000;
  if (thousands == 1) {
    parts.push_back("bin");
  } else if (thousands == 2) {
    parts.push_back("iki");
    parts.push_back("bin");
  }
  int rest = n % 1000;
  const int hundreds = rest / 100;
  if (hundreds == 1) {
    parts.push_back("yüz");
  } else if (hundreds >= 2) {
    parts.push_back(kUnits[hundreds]);
    parts.push_back("yüz");
  }
  rest %= 100;
  if (rest / 10) parts.push_back(kTens[rest / 10]);
  if (rest % 10) parts.push_back(kUnits[rest % 10]);
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out.push_back(' ');
    out += p;
  }
  return out;
}

std::string ordinal_to_words(int n) {
  std::string words = number_to_words(n);
  const std::size_t space = words.rfind(' ');
  const std::string head = space == std::string::npos ? "" : words.substr(0, space + 1);
  std::string last = space == std::string::npos ? words : words.substr(space + 1);

  // The only final-consonant voicing among the number words.
  if (last == "dört") return head + "dördüncü";

  const std::vector<char32_t> cps = decode_all(last);
  char32_t vowel = U'i';
  for (auto it = cps.rbegin(); it != cps.rend(); ++it) {
    if (is_vowel(*it)) {
      vowel = harmony_vowel(*it);
      break;
    }
  }
  std::string suffix;
  if (!is_vowel(cps.back())) utf8::append(suffix, vowel);  // linking vowel
  suffix += "nc";
  utf8::append(suffix, vowel);
  return head + last + suffix;
}

std::vector<LexiconEntry> generate_number_words(int lo, int hi) {
  if (lo < 1 || hi > 2100 || lo > hi) {
    throw std::invalid_argument("generate_number_words: range outside [1, 2100]");
  }
  std::vector<LexiconEntry> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1) * 2);
  for (int n = lo; n <= hi; ++n) {
    out.push_back({number_to_words(n), LexClass::NUM, n});
    out.push_back({std::to_string(n), LexClass::NUM, n});
  }
  return out;
}

std::vector<LexiconEntry> generate_ordinals(int lo, int hi) {
  if (lo < 1 || hi > 2100 || lo > hi) {
    throw std::invalid_argument("generate_ordinals: range outside [1, 2100]");
  }
  std::vector<LexiconEntry> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1) * 2);
  for (int n = lo; n <= hi; ++n) {
    out.push_back({ordinal_to_words(n), LexClass::ORD, n});
    out.push_back({std::to_string(n) + ".", LexClass::ORD, n});
  }
  return out;
}

void Lexicon::add_entry(LexiconEntry entry) {
  auto& bucket = by_surface_[entry.surface];
  const auto it = std::find_if(bucket.begin(), bucket.end(), [&](const LexiconEntry& e) {
    return e.cls == entry.cls;
  });
  if (entry.cls == LexClass::SUF && it == bucket.end()) {
    suffix_forms_.push_back(entry.surface);
    std::sort(suffix_forms_.begin(), suffix_forms_.end(),
              [](const std::string& a, const std::string& b) {
                if (a.size() != b.size()) return a.size() > b.size();
                return a < b;
              });
  }
  max_entry_tokens_ = std::max(max_entry_tokens_,
                               static_cast<std::size_t>(entry.token_count()));
  if (it == bucket.end()) {
    bucket.push_back(std::move(entry));
    ++entry_count_;
  } else {
    *it = std::move(entry);  // later sources shadow earlier ones
  }
}

void Lexicon::add_tsv(std::string_view content, const std::string& source) {
  std::set<std::pair<std::string, LexClass>> seen;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t eol = content.find('\n', pos);
    std::string_view line = content.substr(
        pos, eol == std::string_view::npos ? content.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? content.size() + 1 : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      if (tab == std::string_view::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (fields.size() < 2 || fields.size() > 3) {
      fail(source, lineno, "expected CLASS<TAB>surface<TAB>canonical");
    }
    const auto cls = lex_class_from_name(fields[0]);
    if (!cls) fail(source, lineno, "unknown class tag '" + std::string(fields[0]) + "'");
    if (*cls == LexClass::APST) {
      fail(source, lineno, "APST is structural and cannot have lexicon entries");
    }

    std::string surface;
    try {
      surface = fold_turkish(fields[1]);
    } catch (const input_error&) {
      fail(source, lineno, "surface is not valid UTF-8");
    }
    if (surface.empty()) fail(source, lineno, "empty surface");
    if (surface.front() == ' ' || surface.back() == ' ' ||
        surface.find("  ") != std::string::npos) {
      fail(source, lineno, "multi-word surfaces must use single internal spaces");
    }

    const std::string_view canon = fields.size() == 3 ? fields[2] : std::string_view();
    CanonicalValue value = std::monostate{};
    switch (*cls) {
      case LexClass::NUM:
      case LexClass::ORD: {
        const auto n = parse_int(canon);
        if (!n || *n < 1 || *n > 2100) fail(source, lineno, "canonical must be an integer in [1, 2100]");
        value = *n;
        break;
      }
      case LexClass::DAY: {
        const auto n = parse_int(canon);
        if (!n || *n < 1 || *n > 7) fail(source, lineno, "weekday must be in [1, 7] (Monday = 1)");
        value = *n;
        break;
      }
      case LexClass::MON: {
        const auto n = parse_int(canon);
        if (!n || *n < 1 || *n > 12) fail(source, lineno, "month must be in [1, 12]");
        value = *n;
        break;
      }
      case LexClass::SEAS: {
        if (canon == "SP") value = Season::SP;
        else if (canon == "SU") value = Season::SU;
        else if (canon == "FA") value = Season::FA;
        else if (canon == "WI") value = Season::WI;
        else fail(source, lineno, "season must be one of SP SU FA WI");
        break;
      }
      case LexClass::D_PART: {
        if (canon == "MO") value = DayPart::MO;
        else if (canon == "AF") value = DayPart::AF;
        else if (canon == "EV") value = DayPart::EV;
        else if (canon == "NI") value = DayPart::NI;
        else if (canon == "DT") value = DayPart::DT;
        else fail(source, lineno, "day part must be one of MO AF EV NI DT");
        break;
      }
      case LexClass::T_UNIT: {
        static const std::pair<std::string_view, TimeUnit> kUnitNames[] = {
            {"SECOND", TimeUnit::SECOND}, {"MINUTE", TimeUnit::MINUTE},
            {"HOUR", TimeUnit::HOUR},     {"DAY", TimeUnit::DAY},
            {"WEEK", TimeUnit::WEEK},     {"MONTH", TimeUnit::MONTH},
            {"YEAR", TimeUnit::YEAR},     {"SEASON", TimeUnit::SEASON},
            {"CENTURY", TimeUnit::CENTURY},
        };
        bool found = false;
        for (const auto& [name, unit] : kUnitNames) {
          if (canon == name) {
            value = unit;
            found = true;
            break;
          }
        }
        if (!found) fail(source, lineno, "unknown time unit '" + std::string(canon) + "'");
        break;
      }
      case LexClass::MOD: {
        if (canon == "+1") value = 1;
        else if (canon == "-1") value = -1;
        else fail(source, lineno, "modifier direction must be +1 or -1");
        break;
      }
      case LexClass::DEIC: {
        if (canon == "PRESENT_REF") {
          value = DeicticRef{true, 0};
        } else {
          const auto n = parse_int(canon);
          if (!n) fail(source, lineno, "deictic must be PRESENT_REF or a day offset");
          value = DeicticRef{false, *n};
        }
        break;
      }
      case LexClass::DET:
      case LexClass::QUANT:
      case LexClass::SUF: {
        if (!canon.empty()) fail(source, lineno, "canonical must be empty for this class");
        break;
      }
      case LexClass::APST:
        break;  // unreachable, rejected above
    }

    if (!seen.insert({surface, *cls}).second) {
      fail(source, lineno, "duplicate (surface, class) entry '" + surface + "'");
    }
    add_entry({std::move(surface), *cls, value});
  }
}

std::vector<LexiconEntry> Lexicon::classify(std::string_view folded) const {
  std::vector<LexiconEntry> out;
  const auto it = by_surface_.find(std::string(folded));
  if (it != by_surface_.end()) out = it->second;

  const auto has_class = [&out](LexClass cls) {
    return std::any_of(out.begin(), out.end(),
                       [cls](const LexiconEntry& e) { return e.cls == cls; });
  };
  // Digit spellings parse directly so leading zeros ("03") classify too.
  if (folded.size() <= 8 && all_ascii_digits(folded) && !has_class(LexClass::NUM)) {
    if (const auto n = parse_int(folded); n && *n >= 1 && *n <= 2100) {
      out.push_back({std::string(folded), LexClass::NUM, *n});
    }
  }
  if (folded.size() >= 2 && folded.back() == '.' && folded.size() <= 9 &&
      all_ascii_digits(folded.substr(0, folded.size() - 1)) && !has_class(LexClass::ORD)) {
    if (const auto n = parse_int(folded.substr(0, folded.size() - 1));
        n && *n >= 1 && *n <= 2100) {
      out.push_back({std::string(folded), LexClass::ORD, *n});
    }
  }
  std::sort(out.begin(), out.end(), [](const LexiconEntry& a, const LexiconEntry& b) {
    return static_cast<int>(a.cls) < static_cast<int>(b.cls);
  });
  return out;
}

bool Lexicon::has_suffix(std::string_view form) const {
  const auto it = by_surface_.find(std::string(form));
  if (it == by_surface_.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(),
                     [](const LexiconEntry& e) { return e.cls == LexClass::SUF; });
}

Lexicon Lexicon::defaults() {
  Lexicon lex;
  for (auto& e : generate_number_words(1, 2100)) lex.add_entry(std::move(e));
  for (auto& e : generate_ordinals(1, 2100)) lex.add_entry(std::move(e));
  lex.add_tsv(builtin_lexicon_tsv(), "builtin");
  return lex;
}

Lexicon Lexicon::load(const std::string& path,
                      const std::optional<std::string>& overrides) {
  Lexicon lex;
  for (auto& e : generate_number_words(1, 2100)) lex.add_entry(std::move(e));
  for (auto& e : generate_ordinals(1, 2100)) lex.add_entry(std::move(e));
  lex.add_tsv(read_file(path), path);
  if (overrides) lex.add_tsv(read_file(*overrides), *overrides);
  return lex;
}

Lexicon Lexicon::defaults_with_overrides(const std::optional<std::string>& overrides) {
  Lexicon lex = defaults();
  if (overrides) lex.add_tsv(read_file(*overrides), *overrides);
  return lex;
}

std::string_view builtin_lexicon_tsv() {
  static const std::string_view kTable =
      "# Built-in word table. Format: CLASS<TAB>surface<TAB>canonical\n"
      "# Weekdays (Monday = 1)\n"
      "DAY\tpazartesi\t1\n"
      "DAY\tsalı\t2\n"
      "DAY\tçarşamba\t3\n"
      "DAY\tperşembe\t4\n"
      "DAY\tcuma\t5\n"
      "DAY\tcumartesi\t6\n"
      "DAY\tpazar\t7\n"
      "# Months\n"
      "MON\tocak\t1\n"
      "MON\tşubat\t2\n"
      "MON\tmart\t3\n"
      "MON\tnisan\t4\n"
      "MON\tmayıs\t5\n"
      "MON\thaziran\t6\n"
      "MON\ttemmuz\t7\n"
      "MON\tağustos\t8\n"
      "MON\teylül\t9\n"
      "MON\tekim\t10\n"
      "MON\tkasım\t11\n"
      "MON\taralık\t12\n"
      "# Seasons\n"
      "SEAS\tilkbahar\tSP\n"
      "SEAS\tyaz\tSU\n"
      "SEAS\tsonbahar\tFA\n"
      "SEAS\tkış\tWI\n"
      "# Day parts\n"
      "D_PART\tsabah\tMO\n"
      "D_PART\töğle\tAF\n"
      "D_PART\töğleden sonra\tAF\n"
      "D_PART\takşam\tEV\n"
      "D_PART\tgece\tNI\n"
      "D_PART\tgündüz\tDT\n"
      "# Time units\n"
      "T_UNIT\tsaniye\tSECOND\n"
      "T_UNIT\tdakika\tMINUTE\n"
      "T_UNIT\tsaat\tHOUR\n"
      "T_UNIT\tgün\tDAY\n"
      "T_UNIT\thafta\tWEEK\n"
      "T_UNIT\tay\tMONTH\n"
      "T_UNIT\tyıl\tYEAR\n"
      "T_UNIT\tsene\tYEAR\n"
      "T_UNIT\tmevsim\tSEASON\n"
      "T_UNIT\tyüzyıl\tCENTURY\n"
      "# Relative modifiers\n"
      "MOD\tgeçen\t-1\n"
      "MOD\tönceki\t-1\n"
      "MOD\tgelecek\t+1\n"
      "MOD\tsonraki\t+1\n"
      "MOD\tönümüzdeki\t+1\n"
      "# Deictics: PRESENT_REF or a day offset from the reference date\n"
      "DEIC\tşimdi\tPRESENT_REF\n"
      "DEIC\tbugün\t0\n"
      "DEIC\tdün\t-1\n"
      "DEIC\tyarın\t+1\n"
      "DEIC\tevvelsi gün\t-2\n"
      "# Determiner and frequency quantifiers\n"
      "DET\ther\n"
      "QUANT\tkez\n"
      "QUANT\tkere\n"
      "QUANT\tdefa\n"
      "# Suffix forms used by apostrophe splitting and suffix stripping\n"
      "SUF\tı\n"
      "SUF\ti\n"
      "SUF\tu\n"
      "SUF\tü\n"
      "SUF\tyı\n"
      "SUF\tyi\n"
      "SUF\tyu\n"
      "SUF\tyü\n"
      "SUF\tnı\n"
      "SUF\tni\n"
      "SUF\tnu\n"
      "SUF\tnü\n"
      "SUF\ta\n"
      "SUF\te\n"
      "SUF\tya\n"
      "SUF\tye\n"
      "SUF\tna\n"
      "SUF\tne\n"
      "SUF\tda\n"
      "SUF\tde\n"
      "SUF\tta\n"
      "SUF\tte\n"
      "SUF\tnda\n"
      "SUF\tnde\n"
      "SUF\tdan\n"
      "SUF\tden\n"
      "SUF\ttan\n"
      "SUF\tten\n"
      "SUF\tndan\n"
      "SUF\tnden\n"
      "SUF\tın\n"
      "SUF\tin\n"
      "SUF\tun\n"
      "SUF\tün\n"
      "SUF\tnın\n"
      "SUF\tnin\n"
      "SUF\tnun\n"
      "SUF\tnün\n"
      "SUF\tsı\n"
      "SUF\tsi\n"
      "SUF\tsu\n"
      "SUF\tsü\n"
      "SUF\tlar\n"
      "SUF\tler\n"
      "SUF\tları\n"
      "SUF\tleri\n"
      "SUF\tki\n"
      "SUF\tdaki\n"
      "SUF\tdeki\n"
      "SUF\ttaki\n"
      "SUF\tteki\n"
      "SUF\tndaki\n"
      "SUF\tndeki\n"
      "SUF\tca\n"
      "SUF\tce\n";
  return kTable;
}

}  // namespace zaman
