#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stylo/ml/dataset.hpp"

namespace stylo::ml {

struct Hyperparams {
  // random forest
  std::size_t forest_trees = 200;
  std::size_t forest_size_step = 10;  // granularity of the validation-based size selection
  std::size_t max_depth = 0;          // 0 = grow until pure
  std::size_t min_samples_split = 2;
  std::size_t max_features = 0;  // 0 = round(sqrt(d))
  // boosting
  std::size_t boosting_rounds = 100;
  // logistic regression
  double learning_rate = 0.1;
  double l2 = 1e-3;
  std::size_t max_epochs = 1000;
  std::size_t patience = 10;

  std::uint64_t seed = 42;
  unsigned jobs = 1;
};

/// argmax with ties going to the lowest class.
int argmax(std::span<const double> v);

/// CART classification tree with Gini impurity. Leaves keep class frequencies.
class DecisionTree {
 public:
  struct Node {
    int feature = -1;  // -1 for leaves
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    std::vector<double> proba;
  };

  /// `sample_counts[i]` is how often row i was drawn (bootstrap multiplicity); rows with 0 are ignored.
  void fit(const Matrix& x, std::span<const int> y, std::size_t n_classes, std::span<const int> sample_counts,
           std::size_t max_features, std::size_t max_depth, std::size_t min_samples_split, std::uint64_t seed);
  std::span<const double> predict_proba(std::span<const double> x) const;
  std::size_t node_count() const { return nodes_.size(); }

 private:
  std::vector<Node> nodes_;
};

class RandomForest {
 public:
  void fit(const Matrix& x, std::span<const int> y, std::size_t n_classes, const Hyperparams& hp);
  /// Keeps the prefix of trees with the best validation accuracy (ties keep more trees).
  void select_size(const Matrix& x_val, std::span<const int> y_val, std::size_t step);
  std::vector<double> predict_proba(std::span<const double> x) const;

  std::size_t active_trees() const { return active_; }
  std::size_t total_trees() const { return trees_.size(); }

 private:
  std::vector<double> proba_prefix(std::span<const double> x, std::size_t n) const;

  std::vector<DecisionTree> trees_;
  std::size_t active_ = 0;
  std::size_t n_classes_ = 0;
};

/// Multiclass AdaBoost (SAMME) over decision stumps.
class AdaBoostSamme {
 public:
  struct Stump {
    int feature = -1;  // -1: constant prediction
    double threshold = 0.0;
    int left = 0;
    int right = 0;
    double alpha = 0.0;
  };

  void fit(const Matrix& x, std::span<const int> y, std::size_t n_classes, std::size_t rounds);
  std::vector<double> predict_proba(std::span<const double> x) const;
  const std::vector<Stump>& stumps() const { return stumps_; }

 private:
  std::vector<Stump> stumps_;
  std::size_t n_classes_ = 0;
};

/// Multinomial logistic regression, full-batch gradient descent with L2 and early stopping
/// on validation log-loss.
class LogisticRegression {
 public:
  void fit(const Matrix& x, std::span<const int> y, std::size_t n_classes, const Matrix& x_val, std::span<const int> y_val,
           const Hyperparams& hp);
  std::vector<double> predict_proba(std::span<const double> x) const;
  std::size_t epochs_run() const { return epochs_; }
  std::size_t best_epoch() const { return best_epoch_; }

 private:
  std::vector<double> weights_;  // n_classes x d
  std::vector<double> bias_;
  std::size_t n_classes_ = 0;
  std::size_t dim_ = 0;
  std::size_t epochs_ = 0;
  std::size_t best_epoch_ = 0;
};

/// Soft vote of a random forest, SAMME boosting and logistic regression, all trained on the
/// same standardized features.
class VotingModel {
 public:
  std::vector<double> predict_proba(std::span<const double> raw) const;
  int predict(std::span<const double> raw) const;
  std::vector<int> predict(const Matrix& raw) const;

  std::size_t n_classes() const { return n_classes_; }
  const RandomForest& forest() const { return forest_; }
  const AdaBoostSamme& boosting() const { return boosting_; }
  const LogisticRegression& logistic() const { return logistic_; }
  const Standardizer& standardizer() const { return standardizer_; }

  /// Per-member probabilities for an already standardized row.
  std::vector<double> member_proba(std::size_t member, std::span<const double> standardized) const;

  friend VotingModel train_voting(const Matrix& x_train, std::span<const int> y_train, const Matrix& x_val,
                                  std::span<const int> y_val, std::size_t n_classes, const Hyperparams& hp);

 private:
  Standardizer standardizer_;
  RandomForest forest_;
  AdaBoostSamme boosting_;
  LogisticRegression logistic_;
  std::size_t n_classes_ = 0;
};

/// Throws std::invalid_argument if the training labels hold a single class.
VotingModel train_voting(const Matrix& x_train, std::span<const int> y_train, const Matrix& x_val, std::span<const int> y_val,
                         std::size_t n_classes, const Hyperparams& hp);

}  // namespace stylo::ml
