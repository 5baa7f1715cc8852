#include "triestem/rules.hpp"

#include <charconv>
#include <unordered_map>

namespace triestem {

namespace {

bool all_lower_alpha(std::string_view s) {
  for (char c : s) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

// Strips a trailing '\r' and everything from the first '#'.
std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

[[noreturn]] void fail(ParseErrorKind kind, std::string message) {
  throw ParseError(ParseDiagnostic{kind, "", 0, std::move(message)});
}

}  // namespace

std::string format_diagnostic(const ParseDiagnostic& d) {
  std::string out;
  if (!d.file.empty()) {
    out += d.file;
    out += ':';
  }
  if (d.line > 0) {
    out += std::to_string(d.line);
    out += ':';
  }
  if (!out.empty()) out += ' ';
  out += d.message;
  return out;
}

namespace {
std::string summary_of(const std::vector<ParseDiagnostic>& ds) {
  if (ds.empty()) return "parse error";
  std::string s = format_diagnostic(ds.front());
  if (ds.size() > 1) {
    s += " (+" + std::to_string(ds.size() - 1) + " more)";
  }
  return s;
}
}  // namespace

ParseError::ParseError(ParseDiagnostic d)
    : std::runtime_error(format_diagnostic(d)), diagnostics_{std::move(d)} {}

ParseError::ParseError(std::vector<ParseDiagnostic> ds)
    : std::runtime_error(summary_of(ds)), diagnostics_(std::move(ds)) {}

SuffixRule parse_rule_line(std::string_view line) {
  const auto fields = split_fields(strip_comment(line));
  if (fields.empty()) {
    fail(ParseErrorKind::WrongFieldCount, "empty rule line");
  }
  if (fields.size() > 3) {
    fail(ParseErrorKind::TooManyFields,
         "expected at most 3 fields, got " + std::to_string(fields.size()));
  }

  SuffixRule rule;
  if (!all_lower_alpha(fields[0])) {
    fail(ParseErrorKind::BadCharacter,
         "suffix \"" + std::string(fields[0]) + "\" must be lowercase a-z");
  }
  rule.suffix = std::string(fields[0]);

  if (fields.size() >= 2) {
    const std::string_view count = fields[1];
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), value);
    if (ec != std::errc{} || ptr != count.data() + count.size()) {
      fail(ParseErrorKind::MalformedCount,
           "remove count \"" + std::string(count) +
               "\" is not a non-negative integer");
    }
    if (value > rule.suffix.size()) {
      fail(ParseErrorKind::RemoveExceedsSuffix,
           "remove count " + std::to_string(value) + " exceeds suffix \"" +
               rule.suffix + "\" (length " + std::to_string(rule.suffix.size()) +
               ")");
    }
    rule.remove_count = value;
  }

  if (fields.size() == 3) {
    if (!all_lower_alpha(fields[2])) {
      fail(ParseErrorKind::BadCharacter, "replacement \"" +
                                             std::string(fields[2]) +
                                             "\" must be lowercase a-z");
    }
    rule.replacement = std::string(fields[2]);
  }
  return rule;
}

std::vector<RuleFileEntry> parse_rule_file(std::string_view content) {
  std::vector<RuleFileEntry> entries;
  std::vector<ParseDiagnostic> diagnostics;
  std::unordered_map<std::string, int> seen;  // suffix -> first line

  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t eol = content.find('\n', pos);
    const std::string_view raw =
        content.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                          : eol - pos);
    if (eol == std::string_view::npos && raw.empty()) break;
    ++line_number;
    pos = (eol == std::string_view::npos) ? content.size() + 1 : eol + 1;

    if (split_fields(strip_comment(raw)).empty()) continue;  // blank or comment
    try {
      SuffixRule rule = parse_rule_line(raw);
      auto [it, inserted] = seen.emplace(rule.suffix, line_number);
      if (!inserted) {
        diagnostics.push_back(
            {ParseErrorKind::DuplicateSuffix, "", line_number,
             "suffix \"" + rule.suffix + "\" already defined on line " +
                 std::to_string(it->second)});
        continue;
      }
      entries.push_back({line_number, std::move(rule)});
    } catch (const ParseError& e) {
      for (ParseDiagnostic d : e.diagnostics()) {
        d.line = line_number;
        diagnostics.push_back(std::move(d));
      }
    }
  }

  if (!diagnostics.empty()) throw ParseError(std::move(diagnostics));
  return entries;
}

std::string format_rule(const SuffixRule& rule) {
  std::string out = rule.suffix;
  if (rule.remove_count > 0 || !rule.replacement.empty()) {
    out += ' ';
    out += std::to_string(rule.remove_count);
  }
  if (!rule.replacement.empty()) {
    out += ' ';
    out += rule.replacement;
  }
  return out;
}

}  // namespace triestem
