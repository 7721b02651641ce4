// Command line front end; talks to the tagger exclusively through the C
// API in zaman.h.
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "zaman.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;  // unreadable files, invalid UTF-8, bad lexicon
constexpr int kExitGold = 3;   // at least one gold file had to be skipped
constexpr int kExitUsage = 64;

struct LexiconHandle {
  zaman_lexicon* ptr = nullptr;
  ~LexiconHandle() { zaman_lexicon_free(ptr); }
};

struct TaggerHandle {
  zaman_tagger* ptr = nullptr;
  ~TaggerHandle() { zaman_tagger_free(ptr); }
};

struct DocumentHandle {
  zaman_document* ptr = nullptr;
  ~DocumentHandle() { zaman_document_free(ptr); }
};

struct EvaluatorHandle {
  zaman_evaluator* ptr = nullptr;
  ~EvaluatorHandle() { zaman_evaluator_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { zaman_string_free(ptr); }
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buffer.str();
}

std::string read_stdin() {
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

bool make_tagger(const std::string& lexicon_path, TaggerHandle& tagger) {
  LexiconHandle lexicon;
  zaman_status status =
      lexicon_path.empty()
          ? zaman_lexicon_default(&lexicon.ptr)
          : zaman_lexicon_with_overrides(lexicon_path.c_str(), &lexicon.ptr);
  if (status != ZAMAN_OK) {
    std::cerr << "error: " << zaman_last_error() << "\n";
    return false;
  }
  if (zaman_tagger_new(lexicon.ptr, &tagger.ptr) != ZAMAN_OK) {
    std::cerr << "error: " << zaman_last_error() << "\n";
    return false;
  }
  return true;
}

// A bad --ref-date is the only way tagging the empty string can fail.
bool validate_options(const TaggerHandle& tagger, const zaman_options& options) {
  DocumentHandle probe;
  if (zaman_tag(tagger.ptr, "", &options, &probe.ptr) != ZAMAN_OK) {
    std::cerr << "error: " << zaman_last_error() << "\n";
    return false;
  }
  return true;
}

void print_diagnostics(const zaman_document* doc, const std::string& name) {
  for (size_t i = 0; i < zaman_document_diagnostic_count(doc); ++i) {
    std::cerr << "note: " << name << ": " << zaman_document_diagnostic(doc, i)
              << "\n";
  }
}

int run_tag(const std::vector<std::string>& paths, const zaman_options& options,
            const std::string& lexicon_path, const std::string& format) {
  TaggerHandle tagger;
  if (!make_tagger(lexicon_path, tagger)) return kExitInput;
  if (!validate_options(tagger, options)) return kExitUsage;

  struct Input {
    std::string name;
    std::string content;
  };
  std::vector<Input> inputs;
  if (paths.empty()) {
    inputs.push_back({"<stdin>", read_stdin()});
  } else {
    for (const std::string& path : paths) {
      auto content = read_file(path);
      if (!content) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitInput;
      }
      inputs.push_back({path, std::move(*content)});
    }
  }

  for (const Input& input : inputs) {
    DocumentHandle doc;
    if (zaman_tag(tagger.ptr, input.content.c_str(), &options, &doc.ptr) !=
        ZAMAN_OK) {
      std::cerr << "error: " << input.name << ": " << zaman_last_error() << "\n";
      return kExitInput;
    }
    print_diagnostics(doc.ptr, input.name);
    StringHandle rendered;
    zaman_status status = format == "standoff"
                              ? zaman_render_standoff(doc.ptr, &rendered.ptr)
                              : zaman_render_inline(doc.ptr, &rendered.ptr);
    if (status != ZAMAN_OK) {
      std::cerr << "error: " << input.name << ": " << zaman_last_error() << "\n";
      return kExitInput;
    }
    std::string_view text{rendered.ptr};
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
  }
  return kExitOk;
}

// A path argument is either one gold file or a directory holding them.
std::optional<std::vector<std::string>> collect_gold_paths(
    const std::vector<std::string>& args) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const std::string& arg : args) {
    std::error_code ec;
    if (fs::is_directory(arg, ec)) {
      std::vector<std::string> in_dir;
      for (const auto& entry : fs::directory_iterator(arg, ec)) {
        if (entry.is_regular_file()) in_dir.push_back(entry.path().string());
      }
      if (ec) {
        std::cerr << "error: cannot list " << arg << ": " << ec.message() << "\n";
        return std::nullopt;
      }
      std::sort(in_dir.begin(), in_dir.end());
      files.insert(files.end(), in_dir.begin(), in_dir.end());
    } else if (fs::is_regular_file(arg, ec)) {
      files.push_back(arg);
    } else {
      std::cerr << "error: no such file or directory: " << arg << "\n";
      return std::nullopt;
    }
  }
  return files;
}

int run_eval(const std::vector<std::string>& args, const zaman_options& options,
             const std::string& lexicon_path, bool json) {
  TaggerHandle tagger;
  if (!make_tagger(lexicon_path, tagger)) return kExitInput;
  if (!validate_options(tagger, options)) return kExitUsage;

  auto paths = collect_gold_paths(args);
  if (!paths) return kExitInput;

  EvaluatorHandle evaluator;
  if (zaman_evaluator_new(&evaluator.ptr) != ZAMAN_OK) {
    std::cerr << "error: " << zaman_last_error() << "\n";
    return kExitInput;
  }

  std::size_t skipped = 0;
  for (const std::string& path : *paths) {
    auto content = read_file(path);
    if (!content) {
      std::cerr << "error: cannot read " << path << "\n";
      return kExitInput;
    }
    DocumentHandle gold;
    if (zaman_parse_gold(content->c_str(), &gold.ptr) != ZAMAN_OK) {
      std::cerr << "warning: skipping " << path << ": " << zaman_last_error()
                << "\n";
      ++skipped;
      continue;
    }
    DocumentHandle system;
    if (zaman_tag(tagger.ptr, zaman_document_text(gold.ptr), &options,
                  &system.ptr) != ZAMAN_OK) {
      std::cerr << "warning: skipping " << path << ": " << zaman_last_error()
                << "\n";
      ++skipped;
      continue;
    }
    print_diagnostics(system.ptr, path);
    if (zaman_evaluator_add(evaluator.ptr, gold.ptr, system.ptr) != ZAMAN_OK) {
      std::cerr << "error: " << path << ": " << zaman_last_error() << "\n";
      return kExitInput;
    }
  }

  StringHandle report;
  zaman_status status = json
                            ? zaman_evaluator_report_json(evaluator.ptr, &report.ptr)
                            : zaman_evaluator_report_text(evaluator.ptr, &report.ptr);
  if (status != ZAMAN_OK) {
    std::cerr << "error: " << zaman_last_error() << "\n";
    return kExitInput;
  }
  std::cout << report.ptr;
  return skipped > 0 ? kExitGold : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-based tagger for Turkish temporal expressions"};
  app.set_version_flag("--version", zaman_version());
  app.require_subcommand(1);

  std::string ref_date;
  std::string lexicon_path;
  std::string format = "inline";
  bool strict_case = false;
  bool json = false;
  std::vector<std::string> tag_paths;
  std::vector<std::string> eval_paths;

  CLI::App* tag_cmd =
      app.add_subcommand("tag", "Annotate temporal expressions in plain text");
  tag_cmd->add_option("paths", tag_paths,
                      "Input text files (reads stdin when omitted)");
  tag_cmd->add_option("--ref-date", ref_date, "Reference date YYYY-MM-DD");
  tag_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"inline", "standoff"}))
      ->capture_default_str();
  tag_cmd->add_option("--lexicon", lexicon_path,
                      "TSV file layered over the built-in lexicon");
  tag_cmd->add_flag("--strict-case", strict_case,
                    "Require capitalized month/weekday names");

  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "Score the tagger against inline-annotated gold files");
  eval_cmd->add_option("paths", eval_paths, "Gold files or directories")
      ->required();
  eval_cmd->add_option("--ref-date", ref_date, "Reference date YYYY-MM-DD");
  eval_cmd->add_option("--lexicon", lexicon_path,
                       "TSV file layered over the built-in lexicon");
  eval_cmd->add_flag("--strict-case", strict_case,
                     "Require capitalized month/weekday names");
  eval_cmd->add_flag("--json", json, "Emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  zaman_options options;
  options.ref_date = ref_date.empty() ? nullptr : ref_date.c_str();
  options.strict_case = strict_case ? 1 : 0;

  if (tag_cmd->parsed()) return run_tag(tag_paths, options, lexicon_path, format);
  return run_eval(eval_paths, options, lexicon_path, json);
}
