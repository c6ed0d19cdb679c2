#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

#include "stylo/conllu.hpp"
#include "stylo/lexicon.hpp"

namespace stylo {

/// Shared numbering for noun declensions and verb conjugations.
enum class InflectionClass : std::uint8_t { I = 1, II, III, IV };

enum class TenseProfile : std::uint8_t {
  PresentImperfect,
  PastImperfect,
  PastPerfect,
  FuturePerfectSimple,
  FutureImperfectSimple,
  FutureComplex,
};

enum class Transitivity : std::uint8_t { Transitive, Intransitive };

std::string_view to_string(InflectionClass c);
std::string_view to_string(TenseProfile p);
std::string_view to_string(Transitivity t);

/// Pseudo-feature used in override maps for a part-of-speech correction.
inline constexpr std::string_view kUposKey = "UPOS";

struct DerivedMorph {
  std::optional<InflectionClass> decl_class;
  std::optional<InflectionClass> conj_class;
  std::optional<TenseProfile> tense_profile;
  std::optional<Transitivity> transitivity;
  Features corrected_feats;  // only keys the rules override

  bool operator==(const DerivedMorph&) const = default;
};

/// Rule layer for Ukrainian morphology the tagger does not provide. `pos` arguments
/// are 0-based positions into `Sentence::tokens`.
class MorphologyRules {
 public:
  explicit MorphologyRules(std::shared_ptr<const LanguageData> data);

  const LanguageData& data() const { return *data_; }
  std::shared_ptr<const LanguageData> shared_data() const { return data_; }

  /// Declension from lemma ending and Gender. Absent for non-nouns and indeclinables.
  std::optional<InflectionClass> classify_declension(const Token& token) const;

  /// Conjugation from the infinitive ending (I: -уть/-ють, II: -ать/-ять); III and IV
  /// come only from the irregular-verb entries.
  std::optional<InflectionClass> classify_conjugation(const Token& token) const;

  std::optional<TenseProfile> detect_tense(const Sentence& sentence, std::size_t pos) const;
  std::optional<Transitivity> detect_transitivity(const Sentence& sentence, std::size_t pos) const;

  /// Overrides for the decidable tagger incongruencies. Empty if the token looks right.
  Features correct_feats(const Sentence& sentence, std::size_t pos) const;

 private:
  std::shared_ptr<const LanguageData> data_;
};

/// Writes an override map back into a token (UPOS included).
void apply_overrides(Token& token, const Features& overrides);

/// Copy of the sentence with every correction applied, plus the overrides per token.
Sentence corrected_sentence(const MorphologyRules& rules, const Sentence& sentence, std::vector<Features>* overrides = nullptr);

/// Full derivation for every token. Classification runs on the corrected sentence.
std::vector<DerivedMorph> derive_sentence(const MorphologyRules& rules, const Sentence& sentence);

}  // namespace stylo
