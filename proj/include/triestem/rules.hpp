#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace triestem {

// One suffix rewrite exemplar. `suffix` is kept in input order; the trie
// reverses it on insertion.
struct SuffixRule {
  std::string suffix;
  std::size_t remove_count = 0;
  std::string replacement;

  // A protection rule matches but rewrites nothing; it exists to win
  // longest-match against a shorter, more aggressive rule.
  bool is_protection() const noexcept {
    return remove_count == 0 && replacement.empty();
  }

  friend bool operator==(const SuffixRule&, const SuffixRule&) = default;
};

struct RuleFileEntry {
  int line_number = 0;
  SuffixRule rule;
};

enum class ParseErrorKind {
  MalformedCount,
  RemoveExceedsSuffix,
  BadCharacter,
  TooManyFields,
  WrongFieldCount,
  DuplicateSuffix,
  DuplicateKey,
  Io,
};

struct ParseDiagnostic {
  ParseErrorKind kind;
  std::string file;  // empty when parsing from memory
  int line = 0;      // 0 when unknown
  std::string message;
};

// "file:line: message" with the location parts omitted when unknown.
std::string format_diagnostic(const ParseDiagnostic& d);

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(ParseDiagnostic d);
  explicit ParseError(std::vector<ParseDiagnostic> ds);

  const std::vector<ParseDiagnostic>& diagnostics() const noexcept {
    return diagnostics_;
  }

 private:
  std::vector<ParseDiagnostic> diagnostics_;
};

// Parses one rule line of the form "suffix [remove-count [replacement]]".
// One field is a protection rule, two fields remove without replacing,
// three fields remove and append. Throws ParseError on malformed input.
SuffixRule parse_rule_line(std::string_view line);

// Parses a whole rule file. '#' starts a comment that runs to end of
// line; blank lines are skipped; a suffix may appear at most once.
// All line errors are aggregated into a single ParseError.
std::vector<RuleFileEntry> parse_rule_file(std::string_view content);

// Inverse of parse_rule_line; trailing zero/empty fields are omitted.
std::string format_rule(const SuffixRule& rule);

}  // namespace triestem
