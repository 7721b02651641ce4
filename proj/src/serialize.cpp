#include "serialize.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "errors.hpp"

namespace zaman {

namespace {

std::string escape(std::string_view raw, bool attribute) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        if (attribute) {
          out += "&quot;";
        } else {
          out += c;
        }
        break;
      default: out += c;
    }
  }
  return out;
}

void check_spans(std::string_view text, const std::vector<Timex3>& timexes) {
  std::size_t previous_end = 0;
  for (std::size_t i = 0; i < timexes.size(); ++i) {
    const Timex3& t = timexes[i];
    if (t.begin > t.end || t.end > text.size()) {
      throw std::invalid_argument("annotation " + tid_name(i) +
                                  " has span outside the text");
    }
    if (i > 0 && t.begin < previous_end) {
      throw std::invalid_argument("annotations " + tid_name(i - 1) + " and " +
                                  tid_name(i) + " overlap");
    }
    previous_end = t.end;
  }
}

}  // namespace

std::string tid_name(std::size_t index) { return "t" + std::to_string(index + 1); }

void assign_tids(std::vector<Timex3>& timexes) {
  std::stable_sort(timexes.begin(), timexes.end(),
                   [](const Timex3& a, const Timex3& b) {
                     return a.begin != b.begin ? a.begin < b.begin : a.end < b.end;
                   });
  std::size_t previous_end = 0;
  for (std::size_t i = 0; i < timexes.size(); ++i) {
    if (timexes[i].begin > timexes[i].end) {
      throw std::invalid_argument("annotation " + tid_name(i) + " has an inverted span");
    }
    if (i > 0 && timexes[i].begin < previous_end) {
      throw std::invalid_argument("annotations " + tid_name(i - 1) + " and " +
                                  tid_name(i) + " overlap");
    }
    previous_end = timexes[i].end;
  }
}

std::string render_inline(std::string_view text, std::vector<Timex3> timexes) {
  assign_tids(timexes);
  check_spans(text, timexes);
  std::string out;
  out.reserve(text.size() + 64 * timexes.size());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < timexes.size(); ++i) {
    const Timex3& t = timexes[i];
    out += escape(text.substr(pos, t.begin - pos), false);
    out += "<TIMEX3 tid=\"" + tid_name(i) + "\" type=\"";
    out += timex_type_name(t.type);
    out += "\" value=\"" + escape(t.value, true) + "\"";
    if (t.quant) out += " quant=\"" + escape(*t.quant, true) + "\"";
    if (t.freq) out += " freq=\"" + escape(*t.freq, true) + "\"";
    out += ">";
    out += escape(text.substr(t.begin, t.end - t.begin), false);
    out += "</TIMEX3>";
    pos = t.end;
  }
  out += escape(text.substr(pos), false);
  return out;
}

std::string render_standoff(std::string_view text, std::vector<Timex3> timexes) {
  assign_tids(timexes);
  check_spans(text, timexes);
  nlohmann::ordered_json doc;
  doc["text"] = std::string(text);
  doc["timexes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < timexes.size(); ++i) {
    const Timex3& t = timexes[i];
    nlohmann::ordered_json entry;
    entry["tid"] = tid_name(i);
    entry["type"] = timex_type_name(t.type);
    entry["value"] = t.value;
    if (t.quant) entry["quant"] = *t.quant;
    if (t.freq) entry["freq"] = *t.freq;
    entry["start"] = t.begin;
    entry["end"] = t.end;
    entry["text"] = std::string(text.substr(t.begin, t.end - t.begin));
    doc["timexes"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

namespace {

class GoldParser {
 public:
  explicit GoldParser(std::string_view content) : content_(content) {}

  AnnotatedDocument run() {
    while (pos_ < content_.size()) {
      char c = content_[pos_];
      if (c == '<') {
        handle_tag();
      } else if (c == '&') {
        doc_.text += entity();
      } else {
        doc_.text += c;
        ++pos_;
      }
    }
    if (open_) fail(open_offset_, "TIMEX3 element is never closed");
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(std::size_t offset, const std::string& what) const {
    throw parse_error("offset " + std::to_string(offset) + ": " + what);
  }

  bool consume(std::string_view expected) {
    if (content_.substr(pos_).substr(0, expected.size()) != expected) return false;
    pos_ += expected.size();
    return true;
  }

  // '&' either starts a known entity or stands for itself.
  std::string entity() {
    static constexpr std::pair<std::string_view, char> kEntities[] = {
        {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}};
    for (auto [name, replacement] : kEntities) {
      if (consume(name)) return std::string(1, replacement);
    }
    ++pos_;
    return "&";
  }

  void handle_tag() {
    std::size_t offset = pos_;
    if (consume("</TIMEX3>")) {
      if (!open_) fail(offset, "close tag without an open TIMEX3");
      current_.end = doc_.text.size();
      current_.text = doc_.text.substr(current_.begin, current_.end - current_.begin);
      doc_.timexes.push_back(std::move(current_));
      current_ = Timex3{};
      open_ = false;
      return;
    }
    if (!consume("<TIMEX3 ")) {
      fail(offset, "'<' must start \"<TIMEX3 \" or \"</TIMEX3>\"");
    }
    if (open_) fail(offset, "TIMEX3 elements must not nest");
    open_ = true;
    open_offset_ = offset;
    current_ = Timex3{};
    current_.begin = doc_.text.size();
    parse_attributes(offset);
  }

  void parse_attributes(std::size_t tag_offset) {
    std::optional<std::string> tid;
    std::optional<std::string> type;
    std::optional<std::string> value;
    std::optional<std::string> quant;
    std::optional<std::string> freq;
    while (true) {
      while (pos_ < content_.size() && content_[pos_] == ' ') ++pos_;
      if (pos_ >= content_.size()) fail(tag_offset, "unterminated TIMEX3 tag");
      if (consume(">")) break;
      std::size_t attr_offset = pos_;
      std::string name;
      while (pos_ < content_.size() && content_[pos_] != '=' &&
             content_[pos_] != '>' && content_[pos_] != ' ') {
        name += content_[pos_++];
      }
      if (!consume("=\"")) fail(attr_offset, "attribute is not name=\"value\"");
      std::string raw;
      while (true) {
        if (pos_ >= content_.size()) fail(attr_offset, "unterminated attribute value");
        char c = content_[pos_];
        if (c == '"') {
          ++pos_;
          break;
        }
        if (c == '<') fail(pos_, "'<' inside an attribute value");
        if (c == '&') {
          raw += entity();
        } else {
          raw += c;
          ++pos_;
        }
      }
      std::optional<std::string>* slot = nullptr;
      if (name == "tid") slot = &tid;
      else if (name == "type") slot = &type;
      else if (name == "value") slot = &value;
      else if (name == "quant") slot = &quant;
      else if (name == "freq") slot = &freq;
      if (slot == nullptr) fail(attr_offset, "unknown TIMEX3 attribute \"" + name + "\"");
      if (slot->has_value()) {
        fail(attr_offset, "duplicate TIMEX3 attribute \"" + name + "\"");
      }
      *slot = std::move(raw);
    }
    if (!tid) fail(tag_offset, "TIMEX3 tag is missing tid");
    if (!type) fail(tag_offset, "TIMEX3 tag is missing type");
    if (!value) fail(tag_offset, "TIMEX3 tag is missing value");
    std::string expected = tid_name(doc_.timexes.size());
    if (*tid != expected) {
      fail(tag_offset, "expected tid \"" + expected + "\", got \"" + *tid + "\"");
    }
    auto parsed_type = timex_type_from_name(*type);
    if (!parsed_type) fail(tag_offset, "unknown TIMEX3 type \"" + *type + "\"");
    if ((quant || freq) && *parsed_type != TimexType::SET) {
      fail(tag_offset, "quant/freq are only valid on SET");
    }
    current_.type = *parsed_type;
    current_.value = std::move(*value);
    current_.quant = std::move(quant);
    current_.freq = std::move(freq);
  }

  std::string_view content_;
  std::size_t pos_ = 0;
  AnnotatedDocument doc_;
  Timex3 current_;
  bool open_ = false;
  std::size_t open_offset_ = 0;
};

}  // namespace

AnnotatedDocument parse_gold(std::string_view content) {
  return GoldParser(content).run();
}

}  // namespace zaman
