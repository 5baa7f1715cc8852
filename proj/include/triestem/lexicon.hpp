#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "triestem/rules.hpp"

namespace triestem {

namespace detail {
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};
}  // namespace detail

// Whole-word irregulars: word -> fixed stem. Consulted once, on the
// original (case-folded) word, before any suffix pass runs.
class ExceptionTable {
 public:
  using Map = std::unordered_map<std::string, std::string, detail::StringHash,
                                 std::equal_to<>>;

  // Mapped stem if `word` is a key, nullptr otherwise.
  const std::string* stem_for(std::string_view word) const;

  std::size_t size() const noexcept { return entries_.size(); }
  const Map& entries() const noexcept { return entries_; }

  friend ExceptionTable load_exceptions(std::string_view content);

 private:
  Map entries_;
};

// Names exempt from stemming, matched case-insensitively.
class ProperNounSet {
 public:
  bool contains(std::string_view word) const;

  std::size_t size() const noexcept { return names_.size(); }

  friend ProperNounSet load_proper_nouns(std::string_view content);

 private:
  std::unordered_set<std::string, detail::StringHash, std::equal_to<>> names_;
};

// One "word stem" pair per line; '#' comments and blank lines skipped;
// both fields lowercase a-z; duplicate keys are an error.
ExceptionTable load_exceptions(std::string_view content);

// One name per line; alphabetic only, stored case-folded, duplicates
// tolerated.
ProperNounSet load_proper_nouns(std::string_view content);

}  // namespace triestem
