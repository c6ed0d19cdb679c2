#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stylo/conllu.hpp"

namespace stylo {

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A `lemma<TAB>key=value[|key=value...]` table. Keys are normalized (lowercase, plain
/// apostrophe). Entries written as `-suffix` or `prefix-` are affix patterns; the rest are
/// whole lemmas. Repeated lines for one lemma merge their features.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon load(const std::filesystem::path& file);
  static Lexicon parse(std::string_view text, std::string_view source = "<lexicon>");

  const Features* find(std::string_view word) const;
  std::optional<std::string_view> lookup(std::string_view word, std::string_view key) const;
  bool contains(std::string_view word) const { return find(word) != nullptr; }

  /// Longest `-suffix` entry that `word` ends with.
  const Features* match_suffix(std::string_view word) const;
  /// Longest `prefix-` entry that `word` starts with, leaving at least `min_rest` code points.
  const Features* match_prefix(std::string_view word, std::size_t min_rest = 0) const;

  std::size_t size() const { return words_.size() + suffixes_.size() + prefixes_.size(); }

 private:
  std::unordered_map<std::string, Features> words_;
  std::vector<std::pair<std::string, Features>> suffixes_;  // longest first
  std::vector<std::pair<std::string, Features>> prefixes_;  // longest first
};

/// All bundled lexicons, loaded once from a data directory and shared read-only.
struct LanguageData {
  Lexicon corrections;   // animacy and part-of-speech overrides
  Lexicon aspect;        // aspect exceptions plus perfective prefixes / imperfective suffixes
  Lexicon declension;    // declension exceptions and indeclinables
  Lexicon conjugation;   // infinitive ending rules plus exceptions and irregular verbs
  Lexicon transitivity;  // verbs with fixed transitivity
  Lexicon diminutives;   // diminutive suffixes and false positives
  Lexicon speech_verbs;
  Lexicon amplifiers;

  static std::shared_ptr<const LanguageData> load(const std::filesystem::path& data_dir);
  static std::vector<std::string> file_names();
};

/// Compiled-in location of the bundled data, overridable with STYLOMETRIX_DATA_DIR.
std::filesystem::path default_data_dir();

}  // namespace stylo
