#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "triestem/lexicon.hpp"
#include "triestem/rules.hpp"

namespace triestem {

struct SuffixClass {
  std::string name;
  std::vector<SuffixRule> rules;
};

// Canonical pass order: inflectional suffixes come off before the
// derivational passes can see the base form.
inline constexpr std::array<std::string_view, 11> kPassOrder = {
    "plural", "past", "ing", "ly", "ness", "er",
    "ity",    "ize",  "al",  "ion", "ic"};

bool is_known_class(std::string_view name);

// "plural" -> "plural.rules"
std::string rule_file_name(std::string_view class_name);

inline constexpr std::string_view kExceptionsFile = "exceptions.txt";
inline constexpr std::string_view kNamesFile = "names.txt";
inline constexpr std::string_view kGoldFile = "gold.txt";

struct DataBundle {
  std::vector<SuffixClass> classes;  // all 11, in kPassOrder order
  ExceptionTable exceptions;
  ProperNounSet proper_nouns;
};

// Raw text of a bundled data file (compiled in from data/), or an empty
// view for an unknown name.
std::string_view bundled_file(std::string_view name);

// The bundled classes + lexicon, parsed once on first use. Throws
// ParseError if the compiled-in data is corrupt.
const DataBundle& bundled_data();

// Loads the same fixed-name files from a directory on disk. Diagnostics
// carry the file path and line. Throws ParseError; missing files are
// ParseErrorKind::Io.
DataBundle load_data_dir(const std::filesystem::path& dir);

}  // namespace triestem
