#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triestem/data.hpp"
#include "triestem/lexicon.hpp"
#include "triestem/trie.hpp"

namespace triestem {

struct StemmerConfig {
  // Passes run in this order; subset of kPassOrder, no duplicates.
  std::vector<std::string> enabled_passes{kPassOrder.begin(), kPassOrder.end()};
  // A non-protection rule fires only if word length minus remove_count
  // stays at or above this.
  std::size_t min_stem_length = 3;
  bool apply_exceptions = true;
  bool apply_proper_nouns = true;
};

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PassTrace {
  std::string pass;
  std::optional<SuffixRule> matched;
  bool suppressed = false;  // a non-protection match was blocked by the guard
  std::string form;         // word after this pass
};

struct StemTrace {
  std::string result;
  bool passthrough = false;  // token had characters outside a-z
  bool proper_noun = false;
  bool exception = false;
  std::vector<PassTrace> passes;
};

// Immutable assembled stemmer: lexicon plus one trie per enabled pass.
// stem() and stem_with_trace() are reentrant; concurrent calls are safe.
class Pipeline {
 public:
  // Throws ConfigError for an unknown or duplicated pass or a zero
  // min_stem_length; trie build errors (duplicate suffixes) propagate
  // as ParseError.
  static Pipeline build(StemmerConfig config,
                        const std::vector<SuffixClass>& classes,
                        ExceptionTable exceptions,
                        ProperNounSet proper_nouns);

  // Case-folds, short-circuits on proper nouns and exceptions, then runs
  // the enabled passes in order, applying at most one rule per pass.
  // Returns the lowercase stem; tokens containing anything outside a-z
  // after folding come back unchanged.
  std::string stem(std::string_view token) const;

  // Same result as stem(), plus one record per executed pass.
  StemTrace stem_with_trace(std::string_view token) const;

  const StemmerConfig& config() const noexcept { return config_; }
  const std::vector<std::pair<std::string, RuleTrie>>& tries() const noexcept {
    return tries_;
  }

 private:
  Pipeline() = default;

  StemmerConfig config_;
  std::vector<std::pair<std::string, RuleTrie>> tries_;
  ExceptionTable exceptions_;
  ProperNounSet proper_nouns_;
};

// Pipeline over the bundled data; all eleven passes unless configured
// otherwise.
Pipeline make_default_pipeline(StemmerConfig config = {});

}  // namespace triestem
