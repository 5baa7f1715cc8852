#include "triestem/lexicon.hpp"

#include <utility>

namespace triestem {

namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
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

bool all_lower_alpha(std::string_view s) {
  for (char c : s) {
    if (c < 'a' || c > 'z') return false;
  }
  return !s.empty();
}

bool all_alpha(std::string_view s) {
  for (char c : s) {
    if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'))) return false;
  }
  return !s.empty();
}

std::string fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  }
  return out;
}

template <typename Fn>
void for_each_line(std::string_view content, Fn&& fn) {
  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t eol = content.find('\n', pos);
    const std::string_view raw = content.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    if (eol == std::string_view::npos && raw.empty()) break;
    ++line_number;
    pos = (eol == std::string_view::npos) ? content.size() + 1 : eol + 1;
    fn(line_number, raw);
  }
}

}  // namespace

const std::string* ExceptionTable::stem_for(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

bool ProperNounSet::contains(std::string_view word) const {
  if (word.empty()) return false;
  for (char c : word) {
    if (c >= 'A' && c <= 'Z') return names_.contains(fold(word));
  }
  return names_.contains(word);
}

ExceptionTable load_exceptions(std::string_view content) {
  ExceptionTable table;
  std::vector<ParseDiagnostic> diagnostics;

  for_each_line(content, [&](int line, std::string_view raw) {
    const auto fields = split_fields(strip_comment(raw));
    if (fields.empty()) return;
    if (fields.size() != 2) {
      diagnostics.push_back({ParseErrorKind::WrongFieldCount, "", line,
                             "expected \"word stem\", got " +
                                 std::to_string(fields.size()) + " fields"});
      return;
    }
    if (!all_lower_alpha(fields[0]) || !all_lower_alpha(fields[1])) {
      diagnostics.push_back({ParseErrorKind::BadCharacter, "", line,
                             "entries must be lowercase a-z"});
      return;
    }
    auto [it, inserted] =
        table.entries_.emplace(std::string(fields[0]), std::string(fields[1]));
    if (!inserted) {
      diagnostics.push_back({ParseErrorKind::DuplicateKey, "", line,
                             "word \"" + std::string(fields[0]) +
                                 "\" already mapped to \"" + it->second + "\""});
    }
  });

  if (!diagnostics.empty()) throw ParseError(std::move(diagnostics));
  return table;
}

ProperNounSet load_proper_nouns(std::string_view content) {
  ProperNounSet set;
  std::vector<ParseDiagnostic> diagnostics;

  for_each_line(content, [&](int line, std::string_view raw) {
    const auto fields = split_fields(strip_comment(raw));
    if (fields.empty()) return;
    if (fields.size() != 1) {
      diagnostics.push_back({ParseErrorKind::WrongFieldCount, "", line,
                             "expected one name per line, got " +
                                 std::to_string(fields.size()) + " fields"});
      return;
    }
    if (!all_alpha(fields[0])) {
      diagnostics.push_back({ParseErrorKind::BadCharacter, "", line,
                             "name \"" + std::string(fields[0]) +
                                 "\" must be alphabetic"});
      return;
    }
    set.names_.insert(fold(fields[0]));
  });

  if (!diagnostics.empty()) throw ParseError(std::move(diagnostics));
  return set;
}

}  // namespace triestem
