#pragma once

#include <string>
#include <string_view>

#include "errors.hpp"

namespace zaman {

namespace utf8 {

// Decodes one codepoint starting at s[pos]. On success stores it in cp,
// advances pos past the sequence and returns true. Returns false on a
// malformed or truncated sequence (pos is left unchanged). Overlong
// encodings, surrogates and values above U+10FFFF are rejected.
bool decode(std::string_view s, std::size_t& pos, char32_t& cp);

void append(std::string& out, char32_t cp);

bool valid(std::string_view s);

}  // namespace utf8

// Locale-independent Turkish lowercasing over UTF-8: I -> ı, İ -> i,
// ASCII A-Z, and Ç Ğ Ö Ş Ü (plus circumflexed Â Î Û). Everything else
// passes through unchanged. Throws input_error on invalid UTF-8.
std::string fold_turkish(std::string_view text);

char32_t fold_turkish_cp(char32_t cp);

// Uppercase letters of the Turkish alphabet (incl. plain ASCII A-Z).
bool is_turkish_upper(char32_t cp);

}  // namespace zaman
