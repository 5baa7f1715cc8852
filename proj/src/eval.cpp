#include "triestem/eval.hpp"

#include <algorithm>
#include <random>

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

bool known_source(std::string_view source) {
  return is_known_class(source) || source == "exception" ||
         source == "proper" || source == "pipeline";
}

}  // namespace

std::vector<GoldPair> parse_gold(std::string_view content) {
  std::vector<GoldPair> pairs;
  std::vector<ParseDiagnostic> diagnostics;

  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t eol = content.find('\n', pos);
    const std::string_view raw = content.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    if (eol == std::string_view::npos && raw.empty()) break;
    ++line_number;
    pos = (eol == std::string_view::npos) ? content.size() + 1 : eol + 1;

    const auto fields = split_fields(strip_comment(raw));
    if (fields.empty()) continue;
    if (fields.size() != 3) {
      diagnostics.push_back({ParseErrorKind::WrongFieldCount, "", line_number,
                             "expected \"word expected_stem source\", got " +
                                 std::to_string(fields.size()) + " fields"});
      continue;
    }
    if (!known_source(fields[2])) {
      diagnostics.push_back({ParseErrorKind::BadCharacter, "", line_number,
                             "unknown source \"" + std::string(fields[2]) +
                                 "\""});
      continue;
    }
    pairs.push_back({std::string(fields[0]), std::string(fields[1]),
                     std::string(fields[2])});
  }

  if (!diagnostics.empty()) throw ParseError(std::move(diagnostics));
  return pairs;
}

EvalReport run_gold(const Pipeline& pipeline,
                    const std::vector<GoldPair>& pairs) {
  EvalReport report;
  report.total = pairs.size();
  for (const GoldPair& pair : pairs) {
    const std::string actual = pipeline.stem(pair.word);
    if (actual == pair.expected) {
      ++report.passed;
    } else {
      report.failures.push_back({pair.word, pair.expected, actual,
                                 pipeline.stem_with_trace(pair.word)});
    }
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const GoldFailure& a, const GoldFailure& b) {
              return a.word < b.word;
            });
  return report;
}

const SuffixRule* oracle_lookup(const std::vector<SuffixRule>& rules,
                                std::string_view word) {
  const SuffixRule* best = nullptr;
  for (const SuffixRule& rule : rules) {
    if (rule.suffix.size() > word.size()) continue;
    if (word.substr(word.size() - rule.suffix.size()) != rule.suffix) continue;
    if (best == nullptr || rule.suffix.size() > best->suffix.size()) {
      best = &rule;
    }
  }
  return best;
}

FuzzReport fuzz_trie_vs_oracle(const RuleTrie& trie,
                               const std::vector<SuffixRule>& rules,
                               std::size_t samples, std::size_t max_len,
                               std::uint64_t seed) {
  FuzzReport report;
  report.samples = samples;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(1, max_len);
  std::uniform_int_distribution<int> letter(0, 25);

  std::string word;
  for (std::size_t i = 0; i < samples; ++i) {
    word.clear();
    const std::size_t len = length(rng);
    for (std::size_t j = 0; j < len; ++j) {
      word.push_back(static_cast<char>('a' + letter(rng)));
    }
    const SuffixRule* got = trie.lookup_longest(word);
    const SuffixRule* want = oracle_lookup(rules, word);
    const bool agree =
        (got == nullptr && want == nullptr) ||
        (got != nullptr && want != nullptr && *got == *want);
    if (!agree) {
      ++report.mismatches;
      if (report.examples.size() < 5) report.examples.push_back(word);
    }
  }
  return report;
}

}  // namespace triestem
