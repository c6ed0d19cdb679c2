#include "stylo/morphology.hpp"

#include <array>

#include "stylo/text.hpp"

namespace stylo {

namespace {

constexpr std::u32string_view kVowels = U"аеєиіїоуюя";

bool is_vowel(char32_t c) { return kVowels.find(c) != std::u32string_view::npos; }
bool is_consonant(char32_t c) { return c >= 0x0430 && c <= 0x04FF && !is_vowel(c) && c != U'ь'; }

std::optional<InflectionClass> parse_class(std::string_view v) {
  if (v == "I") return InflectionClass::I;
  if (v == "II") return InflectionClass::II;
  if (v == "III") return InflectionClass::III;
  if (v == "IV") return InflectionClass::IV;
  return std::nullopt;
}

bool is_obj(std::string_view deprel) { return deprel == "obj" || starts_with(deprel, "obj:"); }

bool is_future_aux(const Token& t) {
  return t.upos == Upos::Aux && normalize_key(t.lemma) == "бути" && has_feature(t.feats, "Tense", "Fut");
}

bool is_imperfective_infinitive(const Token& t) {
  return t.upos == Upos::Verb && has_feature(t.feats, "VerbForm", "Inf") && has_feature(t.feats, "Aspect", "Imp");
}

// True if the two positions are directly linked by a head relation.
bool linked(const Sentence& s, std::size_t a, std::size_t b) {
  return s.tokens[a].head == s.tokens[b].index || s.tokens[b].head == s.tokens[a].index;
}

bool in_complex_future(const Sentence& s, std::size_t pos) {
  const Token& t = s.tokens[pos];
  bool aux = is_future_aux(t);
  bool inf = is_imperfective_infinitive(t);
  if (!aux && !inf) return false;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (i == pos || !linked(s, pos, i)) continue;
    const Token& other = s.tokens[i];
    if (aux && is_imperfective_infinitive(other)) return true;
    if (inf && is_future_aux(other)) return true;
  }
  return false;
}

bool is_synthetic_future(std::string_view form) {
  static constexpr std::array<std::string_view, 6> kEndings = {"тиму", "тимеш", "тиме", "тимемо", "тимете", "тимуть"};
  std::string f = strip_reflexive(normalize_key(form));
  for (auto e : kEndings) {
    if (ends_with(f, e)) return true;
  }
  return false;
}

std::optional<std::string_view> aspect_opinion(const Lexicon& lex, std::string_view lemma) {
  std::string full = normalize_key(lemma);
  std::string stem = strip_reflexive(full);
  if (auto v = lex.lookup(full, "Aspect")) return v;
  if (auto v = lex.lookup(stem, "Aspect")) return v;
  if (const Features* f = lex.match_suffix(stem)) {
    if (auto v = feature(*f, "Aspect")) return v;
  }
  if (!ends_with(stem, "ти")) return std::nullopt;
  if (const Features* f = lex.match_prefix(stem, 4)) {
    if (auto v = feature(*f, "Aspect")) return v;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(InflectionClass c) {
  switch (c) {
    case InflectionClass::I: return "I";
    case InflectionClass::II: return "II";
    case InflectionClass::III: return "III";
    case InflectionClass::IV: return "IV";
  }
  return "?";
}

std::string_view to_string(TenseProfile p) {
  switch (p) {
    case TenseProfile::PresentImperfect: return "present_imperfect";
    case TenseProfile::PastImperfect: return "past_imperfect";
    case TenseProfile::PastPerfect: return "past_perfect";
    case TenseProfile::FuturePerfectSimple: return "future_perfect_simple";
    case TenseProfile::FutureImperfectSimple: return "future_imperfect_simple";
    case TenseProfile::FutureComplex: return "future_complex";
  }
  return "?";
}

std::string_view to_string(Transitivity t) { return t == Transitivity::Transitive ? "transitive" : "intransitive"; }

MorphologyRules::MorphologyRules(std::shared_ptr<const LanguageData> data) : data_(std::move(data)) {}

std::optional<InflectionClass> MorphologyRules::classify_declension(const Token& token) const {
  if (token.upos != Upos::Noun || token.lemma.empty() || token.lemma == "_") return std::nullopt;
  if (has_feature(token.feats, "Foreign", "Yes") || has_feature(token.feats, "Abbr", "Yes")) return std::nullopt;
  if (is_abbreviation(token.lemma)) return std::nullopt;
  if (auto v = data_->declension.lookup(token.lemma, "Declension")) return parse_class(*v);

  auto gender = feature(token.feats, "Gender");
  if (!gender) return std::nullopt;
  std::u32string w = decode_utf8(normalize_key(token.lemma));
  if (w.size() < 2) return std::nullopt;
  const char32_t last = w.back();
  const char32_t prev = w[w.size() - 2];
  const bool a_ya = last == U'а' || last == U'я';

  if (*gender == "Fem") {
    if (a_ya) return InflectionClass::I;
    if (is_consonant(last) || last == U'ь') return InflectionClass::III;
    return std::nullopt;
  }
  if (*gender == "Masc") {
    if (a_ya) return InflectionClass::I;
    if (last == U'о' || is_consonant(last) || last == U'ь') return InflectionClass::II;
    return std::nullopt;
  }
  if (*gender == "Neut") {
    if (last == U'о' || last == U'е' || last == U'є') return InflectionClass::II;
    if (last == U'я' && w.size() >= 3 && (prev == U'\'' || (is_consonant(prev) && prev == w[w.size() - 3]))) {
      return InflectionClass::II;  // життя, знання, подвір'я
    }
    if (a_ya) return InflectionClass::IV;
  }
  return std::nullopt;
}

std::optional<InflectionClass> MorphologyRules::classify_conjugation(const Token& token) const {
  if (token.upos != Upos::Verb || token.lemma.empty() || token.lemma == "_") return std::nullopt;
  const Lexicon& lex = data_->conjugation;
  std::string full = normalize_key(token.lemma);
  if (auto v = lex.lookup(full, "Conjugation")) return parse_class(*v);
  std::string stem = strip_reflexive(full);
  if (auto v = lex.lookup(stem, "Conjugation")) return parse_class(*v);
  if (const Features* f = lex.match_suffix(stem)) {
    if (auto v = feature(*f, "Conjugation")) return parse_class(*v);
  }
  return std::nullopt;
}

std::optional<TenseProfile> MorphologyRules::detect_tense(const Sentence& sentence, std::size_t pos) const {
  const Token& t = sentence.tokens.at(pos);
  if (t.upos != Upos::Verb && t.upos != Upos::Aux) return std::nullopt;
  if (in_complex_future(sentence, pos)) return TenseProfile::FutureComplex;
  // Auxiliaries only count as part of the analytic future.
  if (t.upos == Upos::Aux) return std::nullopt;
  if (auto mood = feature(t.feats, "Mood"); mood && *mood != "Ind") return std::nullopt;

  auto tense = feature(t.feats, "Tense");
  auto aspect = feature(t.feats, "Aspect");
  if (!tense || !aspect) return std::nullopt;
  const bool imp = *aspect == "Imp";
  const bool perf = *aspect == "Perf";
  if (*tense == "Pres") {
    if (imp) return TenseProfile::PresentImperfect;
    // Perfective non-past forms have future meaning.
    if (perf) return TenseProfile::FuturePerfectSimple;
  } else if (*tense == "Past") {
    if (imp) return TenseProfile::PastImperfect;
    if (perf) return TenseProfile::PastPerfect;
  } else if (*tense == "Fut") {
    if (perf) return TenseProfile::FuturePerfectSimple;
    if (imp && is_synthetic_future(t.form)) return TenseProfile::FutureImperfectSimple;
  }
  return std::nullopt;
}

std::optional<Transitivity> MorphologyRules::detect_transitivity(const Sentence& sentence, std::size_t pos) const {
  const Token& t = sentence.tokens.at(pos);
  if (t.upos != Upos::Verb) return std::nullopt;
  if (is_reflexive(normalize_key(t.lemma)) || is_reflexive(normalize_key(t.form))) return Transitivity::Intransitive;
  if (auto v = data_->transitivity.lookup(t.lemma, "Transitivity")) {
    return *v == "Trans" ? Transitivity::Transitive : Transitivity::Intransitive;
  }
  for (const auto& other : sentence.tokens) {
    if (other.head == t.index && is_obj(other.deprel)) return Transitivity::Transitive;
  }
  return Transitivity::Intransitive;
}

Features MorphologyRules::correct_feats(const Sentence& sentence, std::size_t pos) const {
  const Token& t = sentence.tokens.at(pos);
  Features out;

  const Features* entry = data_->corrections.find(t.lemma);
  if (!entry) entry = data_->corrections.find(t.form);

  if (entry) {
    if (auto upos = feature(*entry, kUposKey); upos && t.upos == Upos::Adv && *upos != "ADV") {
      out.emplace(kUposKey, *upos);
      for (const auto& [k, v] : *entry) {
        if (k == kUposKey) continue;
        if (feature(t.feats, k) != std::optional<std::string_view>(v)) out.emplace(k, v);
      }
      return out;
    }
    if (auto anim = feature(*entry, "Animacy"); anim && t.upos == Upos::Noun && feature(t.feats, "Animacy") != anim) {
      out.emplace("Animacy", *anim);
    }
  }

  if (t.upos == Upos::Verb && has_feature(t.feats, "Aspect", "Imp")) {
    if (auto v = aspect_opinion(data_->aspect, t.lemma); v && *v == "Perf") out.emplace("Aspect", "Perf");
  }

  if (has_feature(t.feats, "Case", "Acc") && (t.deprel == "nsubj" || t.deprel == "nsubj:pass") &&
      (t.upos == Upos::Noun || t.upos == Upos::Propn || t.upos == Upos::Pron) && t.head > 0) {
    const Token& head = sentence.tokens[t.head - 1];
    // The object of an impersonal -но/-то form is a genuine accusative.
    if (!has_feature(head.feats, "Person", "0")) out.emplace("Case", "Nom");
  }
  return out;
}

void apply_overrides(Token& token, const Features& overrides) {
  for (const auto& [k, v] : overrides) {
    if (k == kUposKey) {
      if (auto u = parse_upos(v)) token.upos = *u;
    } else {
      token.feats.insert_or_assign(k, v);
    }
  }
}

Sentence corrected_sentence(const MorphologyRules& rules, const Sentence& sentence, std::vector<Features>* overrides) {
  std::vector<Features> local(sentence.tokens.size());
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) local[i] = rules.correct_feats(sentence, i);
  Sentence out = sentence;
  for (std::size_t i = 0; i < out.tokens.size(); ++i) apply_overrides(out.tokens[i], local[i]);
  if (overrides) *overrides = std::move(local);
  return out;
}

std::vector<DerivedMorph> derive_sentence(const MorphologyRules& rules, const Sentence& sentence) {
  std::vector<Features> overrides;
  Sentence fixed = corrected_sentence(rules, sentence, &overrides);
  std::vector<DerivedMorph> out(fixed.tokens.size());
  for (std::size_t i = 0; i < fixed.tokens.size(); ++i) {
    const Token& t = fixed.tokens[i];
    out[i].decl_class = rules.classify_declension(t);
    out[i].conj_class = rules.classify_conjugation(t);
    out[i].tense_profile = rules.detect_tense(fixed, i);
    out[i].transitivity = rules.detect_transitivity(fixed, i);
    out[i].corrected_feats = std::move(overrides[i]);
  }
  return out;
}

}  // namespace stylo
