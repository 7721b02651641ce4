#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "normalize.hpp"

namespace zaman {

// A text with its (ordered, non-overlapping) annotations.
struct AnnotatedDocument {
  std::string text;
  std::vector<Timex3> timexes;
};

// "t1", "t2", ... for the annotation at a zero-based position.
std::string tid_name(std::size_t index);

// Orders annotations by extent; afterwards the n-th one carries tid_name(n).
// Throws std::invalid_argument when two spans overlap or a span is inverted.
void assign_tids(std::vector<Timex3>& timexes);

// The text with every annotation wrapped in a TIMEX3 element. Attributes
// appear as tid, type, value, then quant and freq when set. '&', '<' and
// '>' are escaped in text, additionally '"' inside attribute values; all
// other bytes pass through unchanged. Spans must lie within the text.
std::string render_inline(std::string_view text, std::vector<Timex3> timexes);

// JSON object {"text": ..., "timexes": [...]} with one entry per
// annotation carrying tid, type, value, optional quant/freq, start, end
// and the covered text; ends with a newline.
std::string render_standoff(std::string_view text, std::vector<Timex3> timexes);

// Inverse of render_inline for gold files: returns the plain text and the
// annotations. '<' must open a TIMEX3 element or close one — anything else
// is a parse_error naming the byte offset; unknown entities after '&' pass
// through literally. Elements must not nest, tids must run t1, t2, ... in
// order, the type must be a TIMEX3 type, and quant/freq are only accepted
// on SET annotations.
AnnotatedDocument parse_gold(std::string_view content);

}  // namespace zaman
