#include <algorithm>
#include <array>

#include "stylo/metrics.hpp"
#include "stylo/text.hpp"

namespace stylo {

namespace {

using G = MetricGroup;
using P = TokenPredicate;

// ---- token helpers -------------------------------------------------------

bool deprel_is(const Token& t, std::string_view rel) {
  return t.deprel == rel || (starts_with(t.deprel, rel) && t.deprel.size() > rel.size() && t.deprel[rel.size()] == ':');
}

bool is_content(Upos u) { return u == Upos::Noun || u == Upos::Verb || u == Upos::Adj || u == Upos::Adv; }

bool is_personal_name(const TokenView& v) {
  return v.upos() == Upos::Propn &&
         (v.has("NameType", "Giv") || v.has("NameType", "Sur") || v.has("NameType", "Pat") || v.has("NameType", "Prs"));
}

bool is_pronominal(const TokenView& v) { return v.upos() == Upos::Pron || v.upos() == Upos::Det; }

bool is_finite_verb(const Token& t) {
  if (t.upos != Upos::Verb && t.upos != Upos::Aux) return false;
  for (auto nonfinite : {"Inf", "Conv", "Part", "Vnoun", "Ger"}) {
    if (has_feature(t.feats, "VerbForm", nonfinite)) return false;
  }
  return true;
}

bool has_child(const TokenView& v, std::string_view rel) {
  for (auto c : v.children()) {
    if (deprel_is(v.sentence().token(c), rel)) return true;
  }
  return false;
}

bool has_subject(const TokenView& v) { return has_child(v, "nsubj") || has_child(v, "csubj"); }

// Root predicate, or a predicate coordinated with it.
bool is_root_predicate(const TokenView& v) {
  const AnalyzedSentence& s = v.sentence();
  const Token* cur = &v.token();
  while (deprel_is(*cur, "conj") && cur->head > 0) cur = &s.token(cur->head - 1);
  return cur->deprel == "root" && cur->head == 0;
}

bool is_dash(std::string_view form) { return form == "-" || form == "–" || form == "—" || form == "‒" || form == "―"; }

bool is_dots(std::string_view form) {
  if (form == "…") return true;
  return !form.empty() && std::all_of(form.begin(), form.end(), [](char c) { return c == '.'; });
}

// ---- sentence helpers ----------------------------------------------------

bool is_quote(std::string_view f) { return f == "«" || f == "»" || f == "\"" || f == "“" || f == "”" || f == "„"; }

// Opening/closing token positions of every quoted stretch.
std::vector<std::pair<std::size_t, std::size_t>> quote_spans(const Sentence& s) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::optional<std::size_t> guillemet;
  std::optional<std::size_t> ascii;
  std::optional<std::size_t> curly;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    std::string_view f = s.tokens[i].form;
    if (f == "«") {
      if (!guillemet) guillemet = i;
    } else if (f == "»") {
      if (guillemet) spans.emplace_back(*guillemet, i);
      guillemet.reset();
    } else if (f == "\"") {
      if (ascii) {
        spans.emplace_back(*ascii, i);
        ascii.reset();
      } else {
        ascii = i;
      }
    } else if (f == "„" || f == "“" || f == "”") {
      if (curly && f != "„") {
        spans.emplace_back(*curly, i);
        curly.reset();
      } else if (!curly && f != "”") {
        curly = i;
      }
    }
  }
  std::sort(spans.begin(), spans.end());
  return spans;
}

std::string_view terminal_form(const Sentence& s) {
  for (auto it = s.tokens.rbegin(); it != s.tokens.rend(); ++it) {
    std::string_view f = it->form;
    if (is_quote(f) || f == ")" || f == "]") continue;
    return f;
  }
  return {};
}

bool any_token(const AnalyzedSentence& s, const P& pred) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (pred(TokenView(s, i))) return true;
  }
  return false;
}

// Matches every word of a sentence that satisfies the predicate.
SpanRule whole_sentence(std::function<bool(const AnalyzedSentence&)> pred) {
  return [pred = std::move(pred)](const AnalyzedSentence& s, std::vector<std::size_t>& out) {
    if (!pred(s)) return;
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(i);
  };
}

// Matches one token per construction.
SpanRule each_token(P pred) {
  return [pred = std::move(pred)](const AnalyzedSentence& s, std::vector<std::size_t>& out) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (pred(TokenView(s, i))) out.push_back(i);
    }
  };
}

// ---- builders ------------------------------------------------------------

class Builder {
 public:
  void token(std::string id, G group, std::string description, P pred) {
    specs_.push_back({std::move(id), group, std::move(description), MetricScope::TokenPredicate, std::move(pred)});
  }
  void span(std::string id, std::string description, SpanRule rule) {
    specs_.push_back({std::move(id), G::Syntax, std::move(description), MetricScope::SentenceSpan, std::move(rule)});
  }
  void ratio(std::string id, G group, std::string description, TypeKey key) {
    specs_.push_back({std::move(id), group, std::move(description), MetricScope::Ratio, std::move(key)});
  }
  std::vector<MetricSpec> take() { return std::move(specs_); }

 private:
  std::vector<MetricSpec> specs_;
};

P upos_in(std::initializer_list<Upos> tags) {
  std::vector<Upos> v(tags);
  return [v](const TokenView& t) {
    if (has_feature(t.token().feats, "Foreign", "Yes") && t.upos() != Upos::Punct) return false;
    return std::find(v.begin(), v.end(), t.upos()) != v.end();
  };
}

P upos_with(Upos u, std::string key, std::string value) {
  return [=](const TokenView& t) { return t.upos() == u && t.has(key, value); };
}

P tense_is(TenseProfile p) {
  return [p](const TokenView& t) { return t.morph().tense_profile == p; };
}

P conjugation_is(InflectionClass c) {
  return [c](const TokenView& t) { return t.morph().conj_class == c; };
}

P declension_is(InflectionClass c) {
  return [c](const TokenView& t) { return t.morph().decl_class == c; };
}

P punct_form(std::function<bool(std::string_view)> pred) {
  return [pred = std::move(pred)](const TokenView& t) { return t.upos() == Upos::Punct && pred(t.token().form); };
}

void add_lexical(Builder& b, const std::shared_ptr<const LanguageData>& data) {
  const auto L = G::Lexical;
  auto content = [](const TokenView& t) { return is_content(t.upos()); };
  auto function = [](const TokenView& t) { return t.upos() != Upos::Punct && !is_content(t.upos()); };

  b.ratio("L_TYPE_TOKEN_RATIO_LEMMAS", L, "Type-token ratio for words lemmas",
          [](const TokenView& t) -> std::optional<std::string> { return t.lemma_key(); });
  b.token("L_CONT_A", L, "Incidence of Content words", content);
  b.token("L_FUNC_A", L, "Incidence of Function words", function);
  b.ratio("L_CONT_T", L, "Incidence of Content words types", [content](const TokenView& t) -> std::optional<std::string> {
    if (!content(t)) return std::nullopt;
    return t.lemma_key();
  });
  b.ratio("L_FUNC_T", L, "Incidence of Function words types", [function](const TokenView& t) -> std::optional<std::string> {
    if (!function(t)) return std::nullopt;
    return t.lemma_key();
  });
  b.token("L_PLURAL_NOUNS", L, "Incidence of nouns in plural", upos_with(Upos::Noun, "Number", "Plur"));
  b.token("L_SINGULAR_NOUNS", L, "Incidence of nouns in singular", upos_with(Upos::Noun, "Number", "Sing"));
  b.token("L_PROPER_NAME", L, "Incidence of proper names", [](const TokenView& t) { return t.upos() == Upos::Propn; });
  b.token("L_PERSONAL_NAME", L, "Incidence of personal names", is_personal_name);

  const std::array<std::pair<const char*, const char*>, 7> cases = {{{"NOM", "Nom"},
                                                                      {"GEN", "Gen"},
                                                                      {"DAT", "Dat"},
                                                                      {"ACC", "Acc"},
                                                                      {"INS", "Ins"},
                                                                      {"LOC", "Loc"},
                                                                      {"VOC", "Voc"}}};
  const std::array<const char*, 7> case_names = {"Nominative", "Genitive", "Dative", "Accusative", "Instrumental", "Locative",
                                                 "Vocative"};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    b.token(std::string("L_") + cases[i].first + "_CASE", L, std::string("Incidence of nouns in ") + case_names[i] + " case",
            upos_with(Upos::Noun, "Case", cases[i].second));
  }

  b.token("L_INDIRECT_ADJ", L, "Incidence of indirect adjective", [](const TokenView& t) {
    if (t.upos() != Upos::Adj) return false;
    return t.token().deprel == "root" || deprel_is(t.token(), "xcomp") || has_child(t, "cop");
  });
  b.token("L_DIRECT_ADJ", L, "Incidence of direct adjective",
          [](const TokenView& t) { return t.upos() == Upos::Adj && deprel_is(t.token(), "amod"); });
  b.token("L_QUALITATIVE_ADJ_SUP", L, "Incidence of qualitative superlative adj", upos_with(Upos::Adj, "Degree", "Sup"));
  b.token("L_QUALITATIVE_ADJ_CMP", L, "Incidence of relative adj", upos_with(Upos::Adj, "Degree", "Cmp"));
  b.token("L_RELATIVE_ADJ", L, "Incidence of relative adj", [](const TokenView& t) {
    return t.upos() == Upos::Adj && !t.has_key("Degree") && !t.has_key("VerbForm") && !t.has_key("NumType") &&
           !t.has_key("Poss") && !t.has_key("PronType");
  });
  b.token("L_QULITATIVE_ADJ_P", L, "Incidence of qualitative adj positive", upos_with(Upos::Adj, "Degree", "Pos"));
  b.token("L_ANIM_NOUN", L, "Incidence of animated nouns", upos_with(Upos::Noun, "Animacy", "Anim"));
  b.token("L_ADV_CMP", L, "Incidence of comparative adverbs", upos_with(Upos::Adv, "Degree", "Cmp"));
  b.token("L_ADV_POS", L, "Incidence of positive adverbs", upos_with(Upos::Adv, "Degree", "Pos"));
  b.token("L_ADV_SUP", L, "Incidence of superlative adverbs", upos_with(Upos::Adv, "Degree", "Sup"));
  b.token("L_DIMINUTIVES", L, "Incidence of diminutives", [data](const TokenView& t) {
    if (t.upos() != Upos::Noun) return false;
    std::string lemma = t.lemma_key();
    if (auto v = data->diminutives.lookup(lemma, "Diminutive")) return *v == "Yes";
    const Features* f = data->diminutives.match_suffix(lemma);
    return f && has_feature(*f, "Diminutive", "Yes");
  });
  b.token("L_FEMININE_NAMES", L, "Incidence of feminine proper nouns",
          [](const TokenView& t) { return is_personal_name(t) && t.has("Gender", "Fem"); });
  b.token("L_FLAT_MULTIWORD", L, "Incidence of flat multiwords expressions",
          [](const TokenView& t) { return deprel_is(t.token(), "flat") || has_child(t, "flat"); });
  b.token("L_INANIM_NOUN", L, "Incidence of inanimate nouns", upos_with(Upos::Noun, "Animacy", "Inan"));
  b.token("L_GIVEN_NAMES", L, "Incidence of given names", upos_with(Upos::Propn, "NameType", "Giv"));
  b.token("L_MASCULINE_NAMES", L, "Incidence of masculine proper nouns",
          [](const TokenView& t) { return is_personal_name(t) && t.has("Gender", "Masc"); });
  b.token("L_NOUN_MASCULINE", L, "Incidence of masculine nouns", upos_with(Upos::Noun, "Gender", "Masc"));
  b.token("L_NOUN_FAMININE", L, "Incidence of feminine nouns", upos_with(Upos::Noun, "Gender", "Fem"));
  b.token("L_NOUN_NEUTRAL", L, "Incidence of neutral nouns", upos_with(Upos::Noun, "Gender", "Neut"));
  b.token("L_NUM_CARD", L, "Incidence of numerals cardinals", [](const TokenView& t) {
    return t.has("NumType", "Card") || (t.upos() == Upos::Num && !t.has_key("NumType"));
  });
  b.token("L_NUM_ORD", L, "Incidence of numerals ordinals", [](const TokenView& t) { return t.has("NumType", "Ord"); });
  b.token("L_PRON_DEM", L, "Incidence of demonstrative pronouns",
          [](const TokenView& t) { return is_pronominal(t) && t.has("PronType", "Dem"); });
  b.token("L_PRON_INT", L, "Incidence of indexical pronouns",
          [](const TokenView& t) { return is_pronominal(t) && t.has("PronType", "Int"); });
  b.token("L_PRON_NEG", L, "Incidence of negative pronoun",
          [](const TokenView& t) { return is_pronominal(t) && t.has("PronType", "Neg"); });
  b.token("L_PRON_POS", L, "Incidence of possessive pronoun",
          [](const TokenView& t) { return is_pronominal(t) && t.has("Poss", "Yes"); });
  b.token("L_PRON_PRS", L, "Incidence of personal pronouns", [](const TokenView& t) {
    return t.upos() == Upos::Pron && t.has("PronType", "Prs") && !t.has("Reflex", "Yes");
  });
  b.token("L_PRON_REL", L, "Incidence of relative pronouns",
          [](const TokenView& t) { return is_pronominal(t) && t.has("PronType", "Rel"); });

  b.token("L_PRON_RELATIVE", L, "Incidence of relative pronoun 'що'", [](const TokenView& t) {
    return t.upos() == Upos::Pron && t.has("PronType", "Rel") && t.lemma_key() == "що";
  });
  b.token("L_PRON_RFL", L, "Incidence of reflexive pronoun",
          [](const TokenView& t) { return t.upos() == Upos::Pron && t.has("Reflex", "Yes"); });
  b.token("L_PRON_TOT", L, "Incidence of total pronouns",
          [](const TokenView& t) { return is_pronominal(t) && t.has("PronType", "Tot"); });
  b.token("L_SURNAMES", L, "Incidence of surnames", upos_with(Upos::Propn, "NameType", "Sur"));

  b.token("L_PUNCT", L, "Incidence of punctuation", [](const TokenView& t) { return t.upos() == Upos::Punct; });
  b.token("L_PUNCT_DOT", L, "Incidence of dots", punct_form(is_dots));
  b.token("L_PUNCT_COM", L, "Incidence of comma", punct_form([](std::string_view f) { return f == ","; }));
  b.token("L_PUNCT_SEMC", L, "Incidence of semicolon", punct_form([](std::string_view f) { return f == ";"; }));
  b.token("L_PUNCT_COL", L, "Incidence of colon", punct_form([](std::string_view f) { return f == ":"; }));
  b.token("L_PUNCT_DASH", L, "Incidence of dashes", punct_form(is_dash));

  b.token("L_DIRECT_OBJ", L, "Incidence of direct objects", [](const TokenView& t) { return deprel_is(t.token(), "obj"); });
  b.token("L_INDIRECT_OBJ", L, "Incidence of indirect objects",
          [](const TokenView& t) { return deprel_is(t.token(), "iobj"); });
}

void add_grammar(Builder& b) {
  const auto Gr = G::Grammar;
  auto verb_aspect = [](const char* aspect) {
    return [aspect](const TokenView& t) { return t.upos() == Upos::Verb && t.has("Aspect", aspect); };
  };

  b.token("VF_ROOT_VERB_IMPERFECT", Gr, "Root verbs and conjunctions in imperfect aspect",
          [f = verb_aspect("Imp")](const TokenView& t) { return f(t) && is_root_predicate(t); });
  b.token("VF_ALL_VERB_IMPERFECT", Gr, "Incidence of all verbs in imperfect aspect", verb_aspect("Imp"));
  b.token("VF_ROOT_VERB_PERFECT", Gr, "Root verbs and conjunctions in perfect aspect",
          [f = verb_aspect("Perf")](const TokenView& t) { return f(t) && is_root_predicate(t); });
  b.token("VF_ALL_VERB_PERFECT", Gr, "Incidence of all verbs in perfect aspect", verb_aspect("Perf"));
  b.token("VF_PRESENT_IND_IMPERFECT", Gr, "Incidence of verbs in the present tense, indicative mood, imperfect aspect",
          tense_is(TenseProfile::PresentImperfect));
  b.token("VF_PAST_IND_IMPERFECT", Gr, "Incidence of verbs in the past tense, indicative mood, imperfect aspect",
          tense_is(TenseProfile::PastImperfect));
  b.token("VF_PAST_IND_PERFECT", Gr, "Incidence of verbs in the past tense, indicative mood, perfect aspect",
          tense_is(TenseProfile::PastPerfect));
  b.token("VF_FUT_IND_PERFECT", Gr, "Incidence of verbs in the future tense, indicative mood, perfect aspect",
          tense_is(TenseProfile::FuturePerfectSimple));
  b.token("VF_FUT_IND_IMPERFECT_SIMPLE", Gr,
          "Incidence of verbs in the future tense, indicative mood, imperfect aspect, simple verb form",
          tense_is(TenseProfile::FutureImperfectSimple));
  b.token("VF_FUT_IND_COMPLEX", Gr, "Incidence of verbs in the future tense, indicative mood, complex verb forms",
          tense_is(TenseProfile::FutureComplex));
  b.token("VT_FIRST_CONJ", Gr, "Incidence of verbs in the first declension", conjugation_is(InflectionClass::I));
  b.token("VT_SECOND_CONJ", Gr, "Incidence of verbs in the second declension", conjugation_is(InflectionClass::II));
  b.token("VT_THIRD_CONJ", Gr, "Incidence of verbs in the third declension", conjugation_is(InflectionClass::III));
  b.token("VT_FOURTH_CONJ", Gr, "Incidence of verbs in the fourth declension", conjugation_is(InflectionClass::IV));
  b.token("VF_TRANSITIVE", Gr, "Incidence of transitive verbs",
          [](const TokenView& t) { return t.morph().transitivity == Transitivity::Transitive; });
  b.token("VF_PASSIVE", Gr, "Incidence of verbs in the passive form", [](const TokenView& t) {
    return t.upos() == Upos::Verb && (t.has("Voice", "Pass") || has_child(t, "aux:pass") || has_child(t, "nsubj:pass"));
  });
  b.token("VF_PARTICIPLE_PASSIVE", Gr, "Incidence of passive participles",
          [](const TokenView& t) { return t.has("VerbForm", "Part") && t.has("Voice", "Pass"); });
  b.token("VF_PARTICIPLE_ACTIVE", Gr, "Incidence of active participles",
          [](const TokenView& t) { return t.has("VerbForm", "Part") && t.has("Voice", "Act"); });
  b.token("VF_INTRANSITIVE", Gr, "Incidence of intransitive verbs",
          [](const TokenView& t) { return t.morph().transitivity == Transitivity::Intransitive; });
  b.token("VF_INFINITIVE", Gr, "Incidence of verbs in infinitive", upos_with(Upos::Verb, "VerbForm", "Inf"));
  b.token("VF_IMPERSONAL_VERBS", Gr, "Incidence of impersonal verbs", [](const TokenView& t) {
    if (t.upos() != Upos::Verb) return false;
    if (t.has("Person", "0")) return true;
    return t.has("VerbForm", "Fin") && t.has("Tense", "Past") && t.has("Gender", "Neut") && t.has("Number", "Sing") &&
           !has_subject(t);
  });
  b.token("VF_ADV_PRF_PART", Gr, "Incidence of adverbial perfect participles",
          [](const TokenView& t) { return t.has("VerbForm", "Conv") && t.has("Aspect", "Perf"); });
  b.token("VF_ADV_IMPRF_PART", Gr, "Incidence of adverbial imperfect participles",
          [](const TokenView& t) { return t.has("VerbForm", "Conv") && t.has("Aspect", "Imp"); });

  b.token("VF_FIRST_CONJ", Gr, "Incidence of words in the first declension", declension_is(InflectionClass::I));
  b.token("VF_SECOND_CONJ", Gr, "Incidence of words in the second declension", declension_is(InflectionClass::II));
}

void add_syntax(Builder& b, const std::shared_ptr<const LanguageData>& data) {
  b.span("SY_PARATAXIS", "Number of words in parataxis sentences", whole_sentence([](const AnalyzedSentence& s) {
           return any_token(s, [](const TokenView& t) { return deprel_is(t.token(), "parataxis"); });
         }));
  b.span("SY_DIRECT_SPEECH", "Number of words in direct speech", whole_sentence([data](const AnalyzedSentence& s) {
           for (auto [open, close] : quote_spans(s.sentence)) {
             for (std::size_t v = 0; v < s.size(); ++v) {
               const Token& verb = s.token(v);
               if (v > open && v < close) continue;
               if (verb.upos != Upos::Verb || !data->speech_verbs.contains(verb.lemma)) continue;
               for (std::size_t i = open + 1; i < close; ++i) {
                 const Token& inside = s.token(i);
                 if (inside.head == verb.index || verb.head == inside.index) return true;
               }
             }
           }
           return false;
         }));
  b.span("SY_NEGATIVE", "Number of words in negative sentences", whole_sentence([](const AnalyzedSentence& s) {
           return any_token(s, [](const TokenView& t) {
             if (t.has("Polarity", "Neg")) return true;
             if (t.upos() != Upos::Part) return false;
             auto key = t.lemma_key();
             return key == "не" || key == "ні";
           });
         }));
  b.span("SY_NON_FINITE", "Number of words in sentences without any verbs", whole_sentence([](const AnalyzedSentence& s) {
           return std::none_of(s.sentence.tokens.begin(), s.sentence.tokens.end(), is_finite_verb);
         }));
  b.span("SY_QUOTATIONS", "Number of words in sentences with quotation marks",
         whole_sentence([](const AnalyzedSentence& s) { return !quote_spans(s.sentence).empty(); }));
  b.span("SY_EXCLAMATION", "Number of words in exclamatory sentences", whole_sentence([](const AnalyzedSentence& s) {
           return terminal_form(s.sentence).find('!') != std::string_view::npos;
         }));
  b.span("SY_QUESTION", "Number of words in interrogative sentences", whole_sentence([](const AnalyzedSentence& s) {
           return terminal_form(s.sentence).find('?') != std::string_view::npos;
         }));
  b.span("SY_ELLIPSES", "Number of words in elliptic sentences", whole_sentence([](const AnalyzedSentence& s) {
           if (any_token(s, [](const TokenView& t) { return deprel_is(t.token(), "orphan"); })) return true;
           bool has_verb = any_token(s, [](const TokenView& t) { return t.upos() == Upos::Verb || t.upos() == Upos::Aux; });
           bool has_dash = any_token(s, [](const TokenView& t) { return t.upos() == Upos::Punct && is_dash(t.token().form); });
           return !has_verb && has_dash;
         }));
  b.span("SY_POSITIONING", "Number of positionings (прикладка)",
         each_token([](const TokenView& t) { return deprel_is(t.token(), "appos"); }));
  b.span("SY_CONDITIONAL", "Number of words in conditional sentences", whole_sentence([](const AnalyzedSentence& s) {
           return any_token(s, [](const TokenView& t) {
             if (t.has("Mood", "Cnd")) return true;
             if (t.upos() != Upos::Part && t.upos() != Upos::Aux) return false;
             auto key = t.lemma_key();
             auto form = normalize_key(t.token().form);
             return key == "би" || key == "б" || form == "би" || form == "б";
           });
         }));
  b.span("SY_IMPERATIVE", "Number of words in imperative sentences", whole_sentence([](const AnalyzedSentence& s) {
           return any_token(s, [](const TokenView& t) { return t.has("Mood", "Imp"); });
         }));
  b.span("SY_AMPLIFIED_SENT", "Number of words in amplified sentences", whole_sentence([data](const AnalyzedSentence& s) {
           return any_token(s, [&](const TokenView& t) {
             return t.upos() == Upos::Part &&
                    (data->amplifiers.contains(t.token().lemma) || data->amplifiers.contains(t.token().form));
           });
         }));
  b.span("SY_NOUN_PHRASES", "Number of noun phrases", each_token([](const TokenView& t) {
           if (t.upos() != Upos::Noun && t.upos() != Upos::Propn) return false;
           const Token& tok = t.token();
           return !deprel_is(tok, "flat") && !deprel_is(tok, "compound") && !deprel_is(tok, "fixed");
         }));
}

void add_pos(Builder& b) {
  const auto Pg = G::Pos;
  b.token("POS_VERB", Pg, "Incidence of Verbs", upos_in({Upos::Verb, Upos::Aux}));
  b.token("POS_NOUN", Pg, "Incidence of Nouns", upos_in({Upos::Noun, Upos::Propn}));
  b.token("POS_ADJ", Pg, "Incidence of Adjectives", upos_in({Upos::Adj}));
  b.token("POS_ADV", Pg, "Incidence of Adverbs", upos_in({Upos::Adv}));
  b.token("POS_DET", Pg, "Incidence of Determiners", upos_in({Upos::Det}));
  b.token("POS_INTJ", Pg, "Incidence of Interjections", upos_in({Upos::Intj}));
  b.token("POS_CONJ", Pg, "Incidence of Conjunctions", upos_in({Upos::Cconj, Upos::Sconj}));
  b.token("POS_PART", Pg, "Incidence of Particles", upos_in({Upos::Part}));
  b.token("POS_NUM", Pg, "Incidence of Numerals", upos_in({Upos::Num}));
  b.token("POS_PREP", Pg, "Incidence of Prepositions", upos_in({Upos::Adp}));
  b.token("POS_PRO", Pg, "Incidence of Pronouns", upos_in({Upos::Pron}));
  b.token("POS_OTHER", Pg, "Incidence of Code-Switching", [](const TokenView& t) {
    if (t.upos() == Upos::Punct) return false;
    return t.upos() == Upos::X || t.upos() == Upos::Sym || has_feature(t.token().feats, "Foreign", "Yes");
  });
}

}  // namespace

MetricRegistry builtin_registry(std::shared_ptr<const LanguageData> data) {
  Builder b;
  add_lexical(b, data);
  add_grammar(b);
  add_syntax(b, data);
  add_pos(b);
  return MetricRegistry(b.take());
}

}  // namespace stylo
