#include "turkish.hpp"

namespace zaman {
namespace utf8 {

bool decode(std::string_view s, std::size_t& pos, char32_t& cp) {
  if (pos >= s.size()) return false;
  const unsigned char b0 = static_cast<unsigned char>(s[pos]);
  std::size_t len;
  char32_t value;
  if (b0 < 0x80) {
    len = 1;
    value = b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    value = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    value = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    value = b0 & 0x07;
  } else {
    return false;
  }
  if (pos + len > s.size()) return false;
  for (std::size_t i = 1; i < len; ++i) {
    const unsigned char b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return false;
    value = (value << 6) | (b & 0x3F);
  }
  // Reject overlong encodings, surrogate halves and out-of-range values.
  static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (value < kMin[len]) return false;
  if (value >= 0xD800 && value <= 0xDFFF) return false;
  if (value > 0x10FFFF) return false;
  cp = value;
  pos += len;
  return true;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool valid(std::string_view s) {
  std::size_t pos = 0;
  char32_t cp;
  while (pos < s.size()) {
    if (!decode(s, pos, cp)) return false;
  }
  return true;
}

}  // namespace utf8

char32_t fold_turkish_cp(char32_t cp) {
  switch (cp) {
    case U'I': return U'ı';  // dotless i
    case U'İ': return U'i';  // dotted capital I
    case U'Ç': return U'ç';  // Ç
    case U'Ğ': return U'ğ';  // Ğ
    case U'Ö': return U'ö';  // Ö
    case U'Ş': return U'ş';  // Ş
    case U'Ü': return U'ü';  // Ü
    case U'Â': return U'â';  // Â
    case U'Î': return U'î';  // Î
    case U'Û': return U'û';  // Û
    default:
      if (cp >= U'A' && cp <= U'Z') return cp + 32;
      return cp;
  }
}

std::string fold_turkish(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  char32_t cp;
  while (pos < text.size()) {
    if (!utf8::decode(text, pos, cp)) {
      throw input_error("invalid UTF-8 at byte " + std::to_string(pos));
    }
    utf8::append(out, fold_turkish_cp(cp));
  }
  return out;
}

bool is_turkish_upper(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return true;
  switch (cp) {
    case U'İ':  // İ
    case U'Ç':  // Ç
    case U'Ğ':  // Ğ
    case U'Ö':  // Ö
    case U'Ş':  // Ş
    case U'Ü':  // Ü
    case U'Â':
    case U'Î':
    case U'Û':
      return true;
    default:
      return false;
  }
}

}  // namespace zaman
