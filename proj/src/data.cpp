#include "triestem/data.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <utility>

namespace triestem {

namespace detail {
// Defined in the generated embedded_data.cpp.
struct EmbeddedFile {
  std::string_view name;
  std::string_view text;
};
extern const EmbeddedFile kEmbeddedFiles[];
extern const std::size_t kEmbeddedFileCount;
}  // namespace detail

bool is_known_class(std::string_view name) {
  return std::find(kPassOrder.begin(), kPassOrder.end(), name) !=
         kPassOrder.end();
}

std::string rule_file_name(std::string_view class_name) {
  return std::string(class_name) + ".rules";
}

std::string_view bundled_file(std::string_view name) {
  for (std::size_t i = 0; i < detail::kEmbeddedFileCount; ++i) {
    if (detail::kEmbeddedFiles[i].name == name) {
      return detail::kEmbeddedFiles[i].text;
    }
  }
  return {};
}

namespace {

// Tags diagnostics that lack a location with the file they came from.
[[noreturn]] void rethrow_with_file(const ParseError& e, const std::string& file) {
  std::vector<ParseDiagnostic> ds = e.diagnostics();
  for (ParseDiagnostic& d : ds) {
    if (d.file.empty()) d.file = file;
  }
  throw ParseError(std::move(ds));
}

std::vector<SuffixRule> rules_of(const std::vector<RuleFileEntry>& entries) {
  std::vector<SuffixRule> rules;
  rules.reserve(entries.size());
  for (const RuleFileEntry& entry : entries) rules.push_back(entry.rule);
  return rules;
}

using FileReader = std::function<std::string(std::string_view)>;
using FileLabel = std::function<std::string(std::string_view)>;

DataBundle parse_bundle(const FileReader& read_file, const FileLabel& label) {
  DataBundle bundle;
  for (std::string_view name : kPassOrder) {
    const std::string file = rule_file_name(name);
    try {
      bundle.classes.push_back(
          {std::string(name), rules_of(parse_rule_file(read_file(file)))});
    } catch (const ParseError& e) {
      rethrow_with_file(e, label(file));
    }
  }
  try {
    bundle.exceptions = load_exceptions(read_file(kExceptionsFile));
  } catch (const ParseError& e) {
    rethrow_with_file(e, label(kExceptionsFile));
  }
  try {
    bundle.proper_nouns = load_proper_nouns(read_file(kNamesFile));
  } catch (const ParseError& e) {
    rethrow_with_file(e, label(kNamesFile));
  }
  return bundle;
}

std::string identity_label(std::string_view name) { return std::string(name); }

}  // namespace

const DataBundle& bundled_data() {
  static const DataBundle bundle = parse_bundle(
      [](std::string_view name) {
        std::string_view text = bundled_file(name);
        if (text.empty()) {
          throw ParseError(ParseDiagnostic{ParseErrorKind::Io,
                                           std::string(name), 0,
                                           "bundled file missing"});
        }
        return std::string(text);
      },
      identity_label);
  return bundle;
}

DataBundle load_data_dir(const std::filesystem::path& dir) {
  return parse_bundle(
      [&dir](std::string_view name) {
        const std::filesystem::path path = dir / name;
        std::ifstream in(path, std::ios::binary);
        if (!in) {
          throw ParseError(ParseDiagnostic{ParseErrorKind::Io, path.string(), 0,
                                           "cannot open file"});
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return std::move(buffer).str();
      },
      [&dir](std::string_view name) { return (dir / name).string(); });
}

}  // namespace triestem
