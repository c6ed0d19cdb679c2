#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "stylo/feature_matrix.hpp"
#include "stylo/metrics.hpp"

using namespace stylo;
using stylo::testing::language_data;
using stylo::testing::rules;

namespace {

const MetricRegistry& registry() {
  static MetricRegistry r = builtin_registry(language_data());
  return r;
}

Document doc(const std::string& conllu, const std::string& id = "d") { return parse_conllu(conllu + "\n", id).at(0); }

double value(const Document& d, const std::string& id) {
  return evaluate_metric(analyze(d, rules()), *registry().find(id)).value;
}

std::vector<std::string> forms(const Document& d, const std::string& id) {
  std::vector<std::string> out;
  for (const auto& m : explain_matches(analyze(d, rules()), registry(), id).matched) out.push_back(m.form);
  return out;
}

// 10 tokens, two positive-degree adverbs
const char* kAdverbs =
    "1\tНам\tми\tPRON\t_\tCase=Dat|Number=Plur|Person=1|PronType=Prs\t2\tiobj\t_\t_\n"
    "2\tпотрібно\tпотрібно\tADV\t_\tDegree=Pos\t0\troot\t_\t_\n"
    "3\tвідверто\tвідверто\tADV\t_\tDegree=Pos\t4\tadvmod\t_\t_\n"
    "4\tговорити\tговорити\tVERB\t_\tAspect=Imp|VerbForm=Inf\t2\tcsubj\t_\t_\n"
    "5\tпро\tпро\tADP\t_\t_\t6\tcase\t_\t_\n"
    "6\tце\tце\tPRON\t_\tCase=Acc|PronType=Dem\t4\tobl\t_\t_\n"
    "7\tі\tі\tCCONJ\t_\t_\t8\tcc\t_\t_\n"
    "8\tдіяти\tдіяти\tVERB\t_\tAspect=Imp|VerbForm=Inf\t4\tconj\t_\t_\n"
    "9\tразом\tразом\tADV\t_\t_\t8\tadvmod\t_\t_\n"
    "10\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_\n";

const char* kParataxis =
    "1\tЯ\tя\tPRON\t_\tCase=Nom|Number=Sing|Person=1|PronType=Prs\t2\tnsubj\t_\t_\n"
    "2\tхотів\tхотіти\tVERB\t_\tAspect=Imp|Gender=Masc|Mood=Ind|Number=Sing|Tense=Past|VerbForm=Fin\t0\troot\t_\t_\n"
    "3\tчути\tчути\tVERB\t_\tAspect=Imp|VerbForm=Inf\t2\txcomp\t_\t_\n"
    "4\tвід\tвід\tADP\t_\t_\t5\tcase\t_\t_\n"
    "5\tсвіту\tсвіт\tNOUN\t_\tAnimacy=Inan|Case=Gen|Gender=Masc|Number=Sing\t3\tobl\t_\t_\n"
    "6\t\"\t\"\tPUNCT\t_\t_\t10\tpunct\t_\t_\n"
    "7\tУкраїна\tУкраїна\tPROPN\t_\tCase=Voc|Gender=Fem|NameType=Geo|Number=Sing\t10\tvocative\t_\t_\n"
    "8\t,\t,\tPUNCT\t_\t_\t7\tpunct\t_\t_\n"
    "9\tми\tми\tPRON\t_\tCase=Nom|Number=Plur|Person=1|PronType=Prs\t10\tnsubj\t_\t_\n"
    "10\tбудемо\tбути\tVERB\t_\tAspect=Imp|Mood=Ind|Number=Plur|Person=1|Tense=Fut|VerbForm=Fin\t2\tparataxis\t_\t_\n"
    "11\tз\tз\tADP\t_\t_\t12\tcase\t_\t_\n"
    "12\tтобою\tти\tPRON\t_\tCase=Ins|Number=Sing|Person=2|PronType=Prs\t10\tobl\t_\t_\n"
    "13\t\"\t\"\tPUNCT\t_\t_\t10\tpunct\t_\t_\n";

}  // namespace

TEST_CASE("registry entries carry the table descriptions") {
  REQUIRE(registry().find("POS_ADV"));
  CHECK(registry().find("POS_ADV")->description == "Incidence of Adverbs");
  CHECK(registry().find("SY_POSITIONING")->description == "Number of positionings (прикладка)");
  CHECK(registry().find("L_TYPE_TOKEN_RATIO_LEMMAS")->scope == MetricScope::Ratio);
  CHECK(registry().find("SY_NEGATIVE")->scope == MetricScope::SentenceSpan);
  CHECK(registry().find("NOPE") == nullptr);
  CHECK(registry().group_size(MetricGroup::Pos) == 12);

  auto ids = registry().ids();
  std::sort(ids.begin(), ids.end());
  CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
}

TEST_CASE("positive adverbs") {
  Document d = doc(kAdverbs);
  CHECK(value(d, "L_ADV_POS") == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(forms(d, "L_ADV_POS") == std::vector<std::string>{"потрібно", "відверто"});
  CHECK(value(d, "POS_ADV") == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("a document without adverbs scores zero") {
  Document d = doc("1\tМи\tми\tPRON\t_\t_\t2\tnsubj\t_\t_\n2\tйдемо\tйти\tVERB\t_\t_\t0\troot\t_\t_\n");
  CHECK(value(d, "POS_ADV") == 0.0);
  CHECK(forms(d, "POS_ADV").empty());
}

TEST_CASE("parataxis counts every word of the sentence") {
  Document d = doc(kParataxis);
  CHECK(value(d, "SY_PARATAXIS") == doctest::Approx(1.0));
  CHECK(forms(d, "SY_PARATAXIS").size() == 13);
  CHECK(forms(d, "SY_QUOTATIONS").size() == 13);
}

TEST_CASE("trace size equals the numerator") {
  Document d = doc(kParataxis);
  AnalyzedDocument a = analyze(d, rules());
  for (const auto& spec : registry().metrics()) {
    MetricResult r = evaluate_metric(a, spec);
    CHECK(static_cast<double>(r.trace.matched.size()) == std::round(r.value * static_cast<double>(a.token_count)));
  }
}

TEST_CASE("type-token ratio") {
  Document d = doc(
      "1\tЙди\tйти\tVERB\t_\t_\t0\troot\t_\t_\n2\tйди\tйти\tVERB\t_\t_\t1\tconj\t_\t_\n"
      "3\tйди\t_\tVERB\t_\t_\t1\tconj\t_\t_\n4\t!\t!\tPUNCT\t_\t_\t1\tpunct\t_\t_\n");
  // lemma keys: йти, йти, йди (form stands in for "_"), !
  CHECK(value(d, "L_TYPE_TOKEN_RATIO_LEMMAS") == doctest::Approx(0.75));
  CHECK(value(d, "SY_EXCLAMATION") == doctest::Approx(1.0));
}

TEST_CASE("one document gives one finite row over the full registry") {
  std::vector<Document> corpus = {doc(kAdverbs)};
  FeatureMatrix m = compute_matrix(corpus, registry(), rules());
  CHECK(m.rows() == 1);
  CHECK(m.cols() == registry().size());
  CHECK(std::all_of(m.values.begin(), m.values.end(), [](double v) { return std::isfinite(v); }));
}

TEST_CASE("corpus order permutes rows and nothing else") {
  std::vector<Document> a = {doc(kAdverbs, "x"), doc(kParataxis, "y")};
  std::vector<Document> b = {a[1], a[0]};
  FeatureMatrix ma = compute_matrix(a, registry(), rules());
  FeatureMatrix mb = compute_matrix(b, registry(), rules(), 2);
  CHECK(mb.doc_ids == std::vector<std::string>{"y", "x"});
  for (std::size_t c = 0; c < ma.cols(); ++c) {
    CHECK(ma.at(0, c) == mb.at(1, c));
    CHECK(ma.at(1, c) == mb.at(0, c));
  }
}

TEST_CASE("group selection keeps registry order") {
  const MetricGroup pos[] = {MetricGroup::Pos};
  MetricRegistry sub = registry().select(pos);
  CHECK(sub.size() == 12);
  CHECK(sub[0].id == "POS_VERB");
  CHECK(parse_group("syntax") == MetricGroup::Syntax);
  CHECK_FALSE(parse_group("semantic").has_value());
}

TEST_CASE("unknown metric ids are rejected by explain_matches") {
  AnalyzedDocument a = analyze(doc(kAdverbs), rules());
  CHECK_THROWS_AS(explain_matches(a, registry(), "L_NOPE"), std::out_of_range);
}
