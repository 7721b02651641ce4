#pragma once

#include <stdexcept>

namespace zaman {

// Malformed caller-supplied data (invalid UTF-8, bad reference date, ...).
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable file or directory.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed lexicon or gold-annotation content. Messages name the source
// and the line number (lexicon) or byte offset (gold files).
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zaman
