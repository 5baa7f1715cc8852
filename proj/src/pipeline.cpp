#include "triestem/pipeline.hpp"

#include <cassert>
#include <unordered_set>

namespace triestem {

namespace {

// Lowercases `token` into `out`; false if any character falls outside
// a-z after folding.
bool fold_word(std::string_view token, std::string& out) {
  out.clear();
  out.reserve(token.size());
  for (char c : token) {
    if (c >= 'A' && c <= 'Z') {
      out.push_back(static_cast<char>(c - 'A' + 'a'));
    } else if (c >= 'a' && c <= 'z') {
      out.push_back(c);
    } else {
      return false;
    }
  }
  return !out.empty();
}

}  // namespace

Pipeline Pipeline::build(StemmerConfig config,
                         const std::vector<SuffixClass>& classes,
                         ExceptionTable exceptions,
                         ProperNounSet proper_nouns) {
  if (config.min_stem_length < 1) {
    throw ConfigError("min_stem_length must be at least 1");
  }
  std::unordered_set<std::string_view> seen;
  Pipeline pipeline;
  for (const std::string& pass : config.enabled_passes) {
    if (!seen.insert(pass).second) {
      throw ConfigError("duplicate pass \"" + pass + "\"");
    }
    const SuffixClass* match = nullptr;
    for (const SuffixClass& cls : classes) {
      if (cls.name == pass) {
        match = &cls;
        break;
      }
    }
    if (match == nullptr) {
      throw ConfigError("unknown pass \"" + pass + "\"");
    }
    pipeline.tries_.emplace_back(pass, build_trie(match->rules));
  }
  pipeline.config_ = std::move(config);
  pipeline.exceptions_ = std::move(exceptions);
  pipeline.proper_nouns_ = std::move(proper_nouns);
  return pipeline;
}

std::string Pipeline::stem(std::string_view token) const {
  std::string word;
  if (!fold_word(token, word)) return std::string(token);
  if (config_.apply_proper_nouns && proper_nouns_.contains(word)) return word;
  if (config_.apply_exceptions) {
    if (const std::string* mapped = exceptions_.stem_for(word)) return *mapped;
  }
  for (const auto& [name, trie] : tries_) {
    const SuffixRule* rule = trie.lookup_longest(word);
    if (rule == nullptr || rule->is_protection()) continue;
    if (word.size() - rule->remove_count >= config_.min_stem_length) {
      word.resize(word.size() - rule->remove_count);
      assert(word.size() >= config_.min_stem_length);  // guard safety
      word += rule->replacement;
    }
  }
  return word;
}

StemTrace Pipeline::stem_with_trace(std::string_view token) const {
  StemTrace trace;
  std::string word;
  if (!fold_word(token, word)) {
    trace.passthrough = true;
    trace.result = std::string(token);
    return trace;
  }
  if (config_.apply_proper_nouns && proper_nouns_.contains(word)) {
    trace.proper_noun = true;
    trace.result = std::move(word);
    return trace;
  }
  if (config_.apply_exceptions) {
    if (const std::string* mapped = exceptions_.stem_for(word)) {
      trace.exception = true;
      trace.result = *mapped;
      return trace;
    }
  }
  trace.passes.reserve(tries_.size());
  for (const auto& [name, trie] : tries_) {
    PassTrace record;
    record.pass = name;
    if (const SuffixRule* rule = trie.lookup_longest(word)) {
      record.matched = *rule;
      if (rule->is_protection()) {
        // identity rewrite; the word is unchanged
      } else if (word.size() - rule->remove_count >= config_.min_stem_length) {
        word.resize(word.size() - rule->remove_count);
        word += rule->replacement;
      } else {
        record.suppressed = true;
      }
    }
    record.form = word;
    trace.passes.push_back(std::move(record));
  }
  trace.result = std::move(word);
  return trace;
}

Pipeline make_default_pipeline(StemmerConfig config) {
  const DataBundle& bundle = bundled_data();
  return Pipeline::build(std::move(config), bundle.classes, bundle.exceptions,
                         bundle.proper_nouns);
}

}  // namespace triestem
