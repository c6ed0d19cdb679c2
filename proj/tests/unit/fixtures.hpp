#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "stylo/conllu.hpp"
#include "stylo/lexicon.hpp"
#include "stylo/morphology.hpp"

namespace stylo::testing {

inline const std::filesystem::path kSourceDir = STYLO_SOURCE_DIR;

inline std::shared_ptr<const LanguageData> language_data() {
  static auto data = LanguageData::load(kSourceDir / "data");
  return data;
}

inline const MorphologyRules& rules() {
  static MorphologyRules r(language_data());
  return r;
}

inline Sentence sentence(const std::string& conllu) { return parse_conllu(conllu + "\n").at(0).sentences.at(0); }

inline Token noun(const std::string& lemma, const std::string& feats) {
  Token t;
  t.index = 1;
  t.form = lemma;
  t.lemma = lemma;
  t.upos = Upos::Noun;
  t.feats = parse_features(feats);
  return t;
}

inline Token verb(const std::string& lemma) {
  Token t;
  t.index = 1;
  t.form = lemma;
  t.lemma = lemma;
  t.upos = Upos::Verb;
  t.feats = parse_features("VerbForm=Inf");
  return t;
}

}  // namespace stylo::testing
