#include "triestem/trie.hpp"

#include <cassert>
#include <limits>

namespace triestem {

void RuleTrie::insert(const SuffixRule& rule) {
  if (rule.suffix.empty()) {
    throw ParseError(ParseDiagnostic{ParseErrorKind::BadCharacter, "", 0,
                                     "empty suffix cannot be stored"});
  }
  std::uint32_t node = 0;
  for (auto it = rule.suffix.rbegin(); it != rule.suffix.rend(); ++it) {
    const char c = *it;
    if (c < 'a' || c > 'z') {
      throw ParseError(ParseDiagnostic{
          ParseErrorKind::BadCharacter, "", 0,
          "suffix \"" + rule.suffix + "\" must be lowercase a-z"});
    }
    const std::size_t slot = static_cast<std::size_t>(c - 'a');
    std::uint32_t next = nodes_[node].child[slot];
    if (next == 0) {
      next = static_cast<std::uint32_t>(nodes_.size());
      nodes_.emplace_back();
      nodes_[node].child[slot] = next;
    }
    node = next;
  }
  if (nodes_[node].rule >= 0) {
    throw ParseError(ParseDiagnostic{
        ParseErrorKind::DuplicateSuffix, "", 0,
        "suffix \"" + rule.suffix + "\" already stored"});
  }
  assert(rules_.size() < std::numeric_limits<std::int32_t>::max());
  nodes_[node].rule = static_cast<std::int32_t>(rules_.size());
  rules_.push_back(rule);
}

const SuffixRule* RuleTrie::lookup_longest(std::string_view word) const noexcept {
  std::int32_t best = -1;
  std::uint32_t node = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const char c = *it;
    if (c < 'a' || c > 'z') break;
    const std::uint32_t next = nodes_[node].child[static_cast<std::size_t>(c - 'a')];
    if (next == 0) break;
    node = next;
    if (nodes_[node].rule >= 0) best = nodes_[node].rule;
  }
  return best >= 0 ? &rules_[static_cast<std::size_t>(best)] : nullptr;
}

RuleTrie build_trie(const std::vector<SuffixRule>& rules) {
  RuleTrie trie;
  for (const SuffixRule& rule : rules) trie.insert(rule);
  return trie;
}

std::string apply_rule(std::string_view word, const SuffixRule& rule) {
  assert(word.size() >= rule.remove_count);
  assert(word.size() >= rule.suffix.size() &&
         word.substr(word.size() - rule.suffix.size()) == rule.suffix);
  std::string out(word.substr(0, word.size() - rule.remove_count));
  out += rule.replacement;
  return out;
}

}  // namespace triestem
