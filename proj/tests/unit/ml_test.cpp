#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "stylo/ml/dataset.hpp"
#include "stylo/ml/evaluation.hpp"
#include "stylo/ml/models.hpp"

using namespace stylo;
using namespace stylo::ml;

namespace {

LabeledDataset dataset(const Matrix& x, const std::vector<std::string>& labels) {
  FeatureMatrix fm;
  std::map<std::string, std::string> by_doc;
  for (std::size_t j = 0; j < x.cols; ++j) fm.metric_ids.push_back("m" + std::to_string(j));
  for (std::size_t i = 0; i < x.rows; ++i) {
    fm.doc_ids.push_back("d" + std::to_string(i));
    by_doc[fm.doc_ids.back()] = labels[i];
  }
  fm.values = x.data;
  return make_dataset(std::move(fm), by_doc);
}

// two classes separated by a margin along feature 0, noise elsewhere
LabeledDataset separable(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  Matrix x(n, 4);
  std::vector<std::string> y;
  for (std::size_t i = 0; i < n; ++i) {
    bool pos = i % 2 == 0;
    x.at(i, 0) = (pos ? 2.0 : -2.0) + 0.3 * noise(rng);
    for (std::size_t j = 1; j < 4; ++j) x.at(i, j) = noise(rng);
    y.push_back(pos ? "pos" : "neg");
  }
  return dataset(x, y);
}

}  // namespace

TEST_CASE("substreams are distinct and reproducible") {
  CHECK(substream_seed(1, 0) == substream_seed(1, 0));
  CHECK(substream_seed(1, 0) != substream_seed(1, 1));
  CHECK(substream_seed(1, 0) != substream_seed(2, 0));
}

TEST_CASE("stratified split of 100 documents in 2 classes") {
  std::vector<int> labels(100);
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i % 2);
  Split s = stratified_split(labels, 2, {});
  CHECK(s.train.size() == 68);
  CHECK(s.validation.size() == 12);
  CHECK(s.test.size() == 20);

  std::vector<std::size_t> all;
  for (const auto* part : {&s.train, &s.validation, &s.test}) all.insert(all.end(), part->begin(), part->end());
  std::sort(all.begin(), all.end());
  std::vector<std::size_t> expect(100);
  std::iota(expect.begin(), expect.end(), 0);
  CHECK(all == expect);

  std::size_t test_zero = std::count_if(s.test.begin(), s.test.end(), [&](std::size_t i) { return labels[i] == 0; });
  CHECK(test_zero == 10);

  Split again = stratified_split(labels, 2, {});
  CHECK(again.test == s.test);
  SplitSpec other;
  other.seed = 7;
  CHECK(stratified_split(labels, 2, other).test != s.test);
}

TEST_CASE("labels csv") {
  std::istringstream ok("doc_id,label\na,x\nb,y\n");
  auto labels = read_labels_csv(ok);
  CHECK(labels.at("b") == "y");
  std::istringstream dup("doc_id,label\na,x\na,y\n");
  CHECK_THROWS(read_labels_csv(dup));
  std::istringstream no_header("a,x\n");
  CHECK_THROWS(read_labels_csv(no_header));
}

TEST_CASE("datasets need two classes with two examples each") {
  Matrix x(3, 1);
  CHECK_THROWS(dataset(x, {"a", "a", "a"}));
  CHECK_THROWS(dataset(x, {"a", "a", "b"}));
}

TEST_CASE("standardizer") {
  Matrix x(3, 2);
  x.data = {1.0, 5.0, 2.0, 5.0, 3.0, 5.0};
  Standardizer s;
  s.fit(x);
  Matrix z = s.transform(x);
  CHECK(z.at(0, 0) == doctest::Approx(-std::sqrt(1.5)));
  CHECK(z.at(1, 0) == doctest::Approx(0.0));
  CHECK(z.at(2, 1) == 0.0);
}

TEST_CASE("separable data is learned") {
  LabeledDataset ds = separable(200, 5);
  Matrix all = Matrix::from(ds.matrix);
  Split s = stratified_split(ds.labels, ds.n_classes(), {});
  Hyperparams hp;
  hp.forest_trees = 40;
  VotingModel m = train_voting(all.subset(s.train), ds.labels_for(s.train), all.subset(s.validation),
                               ds.labels_for(s.validation), ds.n_classes(), hp);
  auto pred = m.predict(all.subset(s.validation));
  CHECK(accuracy(pred, ds.labels_for(s.validation)) >= 0.99);
  for (std::size_t member = 0; member < 3; ++member) {
    auto p = m.member_proba(member, std::vector<double>{0.0, 0.0, 0.0, 0.0});
    CHECK(std::accumulate(p.begin(), p.end(), 0.0) == doctest::Approx(1.0));
  }
}

TEST_CASE("constant features predict the majority class") {
  Matrix x(30, 3, 0.25);
  std::vector<int> y(30, 1);
  for (int i = 0; i < 8; ++i) y[i] = 0;
  for (int i = 8; i < 12; ++i) y[i] = 2;
  Hyperparams hp;
  hp.forest_trees = 20;
  VotingModel m = train_voting(x, y, x, y, 3, hp);
  CHECK(m.predict(x.row(0)) == 1);
  CHECK(m.predict(x.row(29)) == 1);
}

TEST_CASE("single-class training data is refused") {
  Matrix x(4, 1, 0.0);
  std::vector<int> y(4, 0);
  CHECK_THROWS_AS(train_voting(x, y, x, y, 2, Hyperparams{}), std::invalid_argument);
}

TEST_CASE("trees do not care about feature scaling") {
  LabeledDataset ds = separable(80, 9);
  Matrix x = Matrix::from(ds.matrix);
  Standardizer st;
  st.fit(x);
  Matrix z = st.transform(x);
  Hyperparams hp;
  hp.forest_trees = 20;
  RandomForest raw, scaled;
  raw.fit(x, ds.labels, 2, hp);
  scaled.fit(z, ds.labels, 2, hp);
  AdaBoostSamme braw, bscaled;
  braw.fit(x, ds.labels, 2, 20);
  bscaled.fit(z, ds.labels, 2, 20);
  for (std::size_t r = 0; r < x.rows; ++r) {
    CHECK(raw.predict_proba(x.row(r)) == scaled.predict_proba(z.row(r)));
    CHECK(argmax(braw.predict_proba(x.row(r))) == argmax(bscaled.predict_proba(z.row(r))));
  }
}

TEST_CASE("forest does not depend on the thread count") {
  LabeledDataset ds = separable(60, 2);
  Matrix x = Matrix::from(ds.matrix);
  Hyperparams hp;
  hp.forest_trees = 30;
  RandomForest one, four;
  one.fit(x, ds.labels, 2, hp);
  hp.jobs = 4;
  four.fit(x, ds.labels, 2, hp);
  for (std::size_t r = 0; r < x.rows; ++r) CHECK(one.predict_proba(x.row(r)) == four.predict_proba(x.row(r)));
}

TEST_CASE("forest size selection keeps a multiple of the step") {
  LabeledDataset ds = separable(60, 4);
  Matrix x = Matrix::from(ds.matrix);
  Hyperparams hp;
  hp.forest_trees = 35;
  RandomForest f;
  f.fit(x, ds.labels, 2, hp);
  CHECK(f.total_trees() == 35);
  f.select_size(x, ds.labels, 10);
  CHECK(f.active_trees() >= 10);
  CHECK((f.active_trees() % 10 == 0 || f.active_trees() == 35));
}

TEST_CASE("logistic regression stops early and keeps the best epoch") {
  LabeledDataset ds = separable(100, 8);
  Matrix x = Matrix::from(ds.matrix);
  Hyperparams hp;
  hp.patience = 5;
  LogisticRegression lr;
  lr.fit(x, ds.labels, 2, x, ds.labels, hp);
  CHECK(lr.epochs_run() <= hp.max_epochs);
  CHECK(lr.best_epoch() <= lr.epochs_run());
  CHECK(argmax(lr.predict_proba(x.row(0))) == ds.labels[0]);
}

TEST_CASE("macro F1") {
  std::vector<int> gold = {0, 0, 1, 1};
  CHECK(macro_f1(gold, gold) == 1.0);
  CHECK(macro_f1(std::vector<int>{0, 1, 0, 1}, gold) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(macro_f1(std::vector<int>{0, 0, 0, 0}, gold) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK_THROWS(macro_f1(std::vector<int>{0}, gold));
  CHECK_THROWS(macro_f1(std::vector<int>{0, 0, 0, 5}, gold, 2));
}

TEST_CASE("macro F1 is invariant under relabeling") {
  std::vector<int> gold = {0, 1, 2, 2, 1, 0, 2, 1};
  std::vector<int> pred = {0, 2, 2, 1, 1, 0, 2, 0};
  const int perm[] = {2, 0, 1};
  std::vector<int> g2, p2;
  for (int v : gold) g2.push_back(perm[v]);
  for (int v : pred) p2.push_back(perm[v]);
  CHECK(macro_f1(pred, gold, 3) == doctest::Approx(macro_f1(p2, g2, 3)).epsilon(1e-15));
}

TEST_CASE("class means") {
  Matrix x(4, 1);
  x.data = {0.02, 0.5, 0.04, 0.7};
  LabeledDataset ds = dataset(x, {"a", "b", "a", "b"});
  auto means = class_means(ds, 0);
  REQUIRE(means.size() == 1);
  CHECK(means[0].first == "m0");
  CHECK(means[0].second == doctest::Approx(0.03).epsilon(1e-15));
  CHECK_THROWS_AS(class_means(ds, 5), std::out_of_range);
}
