#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "triestem/pipeline.hpp"
#include "triestem/trie.hpp"

namespace triestem {

// One regression pair from the gold fixture. `source` names the suffix
// class the pair exercises, or "exception" / "proper" / "pipeline".
struct GoldPair {
  std::string word;
  std::string expected;
  std::string source;
};

// Fixture format: "word expected_stem source" per line, '#' comments.
std::vector<GoldPair> parse_gold(std::string_view content);

struct GoldFailure {
  std::string word;
  std::string expected;
  std::string actual;
  StemTrace trace;
};

struct EvalReport {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<GoldFailure> failures;  // sorted by word
};

EvalReport run_gold(const Pipeline& pipeline,
                    const std::vector<GoldPair>& pairs);

// Reference semantics for longest-match lookup: a flat scan over the
// rule list, independent of the trie. Deliberately naive.
const SuffixRule* oracle_lookup(const std::vector<SuffixRule>& rules,
                                std::string_view word);

struct FuzzReport {
  std::size_t samples = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> examples;  // first few mismatching words
};

// Draws `samples` random a-z words of length 1..max_len and checks that
// trie lookup and the flat-scan oracle agree on each. Deterministic for
// a given seed.
FuzzReport fuzz_trie_vs_oracle(const RuleTrie& trie,
                               const std::vector<SuffixRule>& rules,
                               std::size_t samples, std::size_t max_len,
                               std::uint64_t seed);

}  // namespace triestem
