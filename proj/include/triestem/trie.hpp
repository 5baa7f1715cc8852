#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "triestem/rules.hpp"

namespace triestem {

// Reverse character trie over rule suffixes. Shared suffixes share a
// path, so the longest applicable rule is found in a single back-to-front
// walk of the word. Insert-only while building; immutable afterwards,
// which makes concurrent lookups safe without locks.
class RuleTrie {
 public:
  RuleTrie() : nodes_(1) {}

  // Throws ParseError{DuplicateSuffix} when a rule with the same suffix
  // is already stored, ParseError{BadCharacter} for an empty or
  // non-lowercase suffix (the root never carries a rule).
  void insert(const SuffixRule& rule);

  // Deepest rule on the reverse path of `word`, or nullptr when no rule
  // suffix ends the word. A rule whose suffix equals the whole word
  // counts as a match. Cost is bounded by length(word) node hops.
  const SuffixRule* lookup_longest(std::string_view word) const noexcept;

  std::size_t rule_count() const noexcept { return rules_.size(); }

  // All stored rules, in insertion order.
  const std::vector<SuffixRule>& rules() const noexcept { return rules_; }

 private:
  struct Node {
    std::array<std::uint32_t, 26> child{};  // 0 = absent (slot 0 is the root)
    std::int32_t rule = -1;
  };

  std::vector<Node> nodes_;
  std::vector<SuffixRule> rules_;
};

RuleTrie build_trie(const std::vector<SuffixRule>& rules);

// Rewrites `word` by `rule`: drops the last remove_count characters and
// appends the replacement. The caller must have obtained `rule` from a
// lookup on `word`.
std::string apply_rule(std::string_view word, const SuffixRule& rule);

}  // namespace triestem
