#include "doctest.h"
#include "fixtures.hpp"

using namespace stylo;
using stylo::testing::noun;
using stylo::testing::rules;
using stylo::testing::sentence;
using stylo::testing::verb;

TEST_CASE("noun declension") {
  CHECK(rules().classify_declension(noun("затримка", "Gender=Fem")) == InflectionClass::I);
  CHECK(rules().classify_declension(noun("тато", "Gender=Masc")) == InflectionClass::II);
  CHECK(rules().classify_declension(noun("вікно", "Gender=Neut")) == InflectionClass::II);
  CHECK(rules().classify_declension(noun("ніч", "Gender=Fem")) == InflectionClass::III);
  CHECK(rules().classify_declension(noun("кошеня", "Gender=Neut")) == InflectionClass::IV);
  CHECK_FALSE(rules().classify_declension(noun("таксі", "Gender=Neut")).has_value());
  CHECK_FALSE(rules().classify_declension(verb("писати")).has_value());
}

TEST_CASE("verb conjugation") {
  CHECK(rules().classify_conjugation(verb("писати")) == InflectionClass::I);
  CHECK(rules().classify_conjugation(verb("бачити")) == InflectionClass::II);
  CHECK(rules().classify_conjugation(verb("сміятися")).has_value());
  CHECK_FALSE(rules().classify_conjugation(noun("лист", "Gender=Masc")).has_value());
}

TEST_CASE("future tense: analytic and synthetic forms") {
  Sentence s = sentence(
      "1\tЯ\tя\tPRON\t_\t_\t3\tnsubj\t_\t_\n"
      "2\tбуду\tбути\tAUX\t_\tMood=Ind|Person=1|Tense=Fut|VerbForm=Fin\t3\taux\t_\t_\n"
      "3\tписати\tписати\tVERB\t_\tAspect=Imp|VerbForm=Inf\t0\troot\t_\t_\n"
      "4\t,\t,\tPUNCT\t_\t_\t5\tpunct\t_\t_\n"
      "5\tписатиму\tписати\tVERB\t_\tAspect=Imp|Mood=Ind|Person=1|Tense=Fut|VerbForm=Fin\t3\tconj\t_\t_\n"
      "6\tдобре\tдобре\tADV\t_\tDegree=Pos\t5\tadvmod\t_\t_\n");
  CHECK(rules().detect_tense(s, 1) == TenseProfile::FutureComplex);
  CHECK(rules().detect_tense(s, 2) == TenseProfile::FutureComplex);
  CHECK(rules().detect_tense(s, 4) == TenseProfile::FutureImperfectSimple);
  CHECK_FALSE(rules().detect_tense(s, 5).has_value());
}

TEST_CASE("transitivity") {
  Sentence s = sentence(
      "1\tЯ\tя\tPRON\t_\t_\t2\tnsubj\t_\t_\n"
      "2\tнапишу\tнаписати\tVERB\t_\tAspect=Perf|Tense=Fut|VerbForm=Fin\t0\troot\t_\t_\n"
      "3\tлиста\tлист\tNOUN\t_\tAnimacy=Anim|Case=Acc|Gender=Masc|Number=Sing\t2\tobj\t_\t_\n"
      "4\tі\tі\tCCONJ\t_\t_\t5\tcc\t_\t_\n"
      "5\tсміятимуся\tсміятися\tVERB\t_\tAspect=Imp|Tense=Fut|VerbForm=Fin\t2\tconj\t_\t_\n"
      "6\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_\n");
  CHECK(rules().detect_transitivity(s, 1) == Transitivity::Transitive);
  CHECK(rules().detect_transitivity(s, 4) == Transitivity::Intransitive);
  CHECK_FALSE(rules().detect_transitivity(s, 2).has_value());

  Sentence bare = sentence("1\tЙшов\tйти\tVERB\t_\tAspect=Imp|Tense=Past|VerbForm=Fin\t0\troot\t_\t_\n");
  CHECK(rules().detect_transitivity(bare, 0) == Transitivity::Intransitive);
}

TEST_CASE("tagger incongruencies") {
  Sentence s = sentence(
      "1\tЗакрапало\tзакрапати\tVERB\t_\tAspect=Imp|Gender=Neut|Mood=Ind|Number=Sing|Tense=Past|VerbForm=Fin\t0\troot\t_\t_\n"
      "2\tна\tна\tADP\t_\t_\t3\tcase\t_\t_\n"
      "3\tлиста\tлист\tNOUN\t_\tAnimacy=Anim|Case=Acc|Gender=Masc|Number=Sing\t1\tobl\t_\t_\n"
      "4\t.\t.\tPUNCT\t_\t_\t1\tpunct\t_\t_\n");
  CHECK(format_features(rules().correct_feats(s, 0)) == "Aspect=Perf");
  CHECK(format_features(rules().correct_feats(s, 2)) == "Animacy=Inan");
  CHECK(rules().correct_feats(s, 1).empty());
  CHECK(rules().correct_feats(s, 3).empty());

  Sentence fixed = corrected_sentence(rules(), s);
  CHECK(has_feature(fixed.tokens[0].feats, "Aspect", "Perf"));
  CHECK(has_feature(fixed.tokens[2].feats, "Animacy", "Inan"));
}

TEST_CASE("an imperfective stem with a perfective-looking prefix stays imperfective") {
  Sentence s = sentence("1\tПовіває\tповівати\tVERB\t_\tAspect=Imp|Mood=Ind|Tense=Pres|VerbForm=Fin\t0\troot\t_\t_\n");
  CHECK(rules().correct_feats(s, 0).empty());
}

TEST_CASE("a missing lexicon names the file") {
  auto dir = std::filesystem::temp_directory_path() / "stylo_no_lexicons";
  std::filesystem::create_directories(dir);
  try {
    LanguageData::load(dir);
    FAIL("expected LexiconError");
  } catch (const LexiconError& e) {
    CHECK(std::string(e.what()).find(".tsv") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}
