#include <stdexcept>

#include "stylo/ml/models.hpp"

namespace stylo::ml {

VotingModel train_voting(const Matrix& x_train, std::span<const int> y_train, const Matrix& x_val, std::span<const int> y_val,
                         std::size_t n_classes, const Hyperparams& hp) {
  if (x_train.rows == 0 || y_train.size() != x_train.rows) throw std::invalid_argument("train_voting: bad training set");
  if (y_val.size() != x_val.rows) throw std::invalid_argument("train_voting: bad validation set");
  bool single = true;
  for (int label : y_train) {
    if (label < 0 || static_cast<std::size_t>(label) >= n_classes) throw std::invalid_argument("train_voting: label out of range");
    single = single && label == y_train[0];
  }
  if (single) throw std::invalid_argument("train_voting: training split holds a single class");

  VotingModel model;
  model.n_classes_ = n_classes;
  model.standardizer_.fit(x_train);
  Matrix xs = model.standardizer_.transform(x_train);
  Matrix vs = model.standardizer_.transform(x_val);

  model.forest_.fit(xs, y_train, n_classes, hp);
  model.forest_.select_size(vs, y_val, hp.forest_size_step);
  model.boosting_.fit(xs, y_train, n_classes, hp.boosting_rounds);
  model.logistic_.fit(xs, y_train, n_classes, vs, y_val, hp);
  return model;
}

std::vector<double> VotingModel::member_proba(std::size_t member, std::span<const double> standardized) const {
  switch (member) {
    case 0: return forest_.predict_proba(standardized);
    case 1: return boosting_.predict_proba(standardized);
    case 2: return logistic_.predict_proba(standardized);
    default: throw std::out_of_range("voting model has three members");
  }
}

std::vector<double> VotingModel::predict_proba(std::span<const double> raw) const {
  std::vector<double> xs(raw.size());
  standardizer_.transform_row(raw, xs);
  std::vector<double> out(n_classes_, 0.0);
  for (std::size_t m = 0; m < 3; ++m) {
    auto p = member_proba(m, xs);
    for (std::size_t k = 0; k < n_classes_; ++k) out[k] += p[k] / 3.0;
  }
  return out;
}

int VotingModel::predict(std::span<const double> raw) const { return argmax(predict_proba(raw)); }

std::vector<int> VotingModel::predict(const Matrix& raw) const {
  std::vector<int> out;
  out.reserve(raw.rows);
  for (std::size_t r = 0; r < raw.rows; ++r) out.push_back(predict(raw.row(r)));
  return out;
}

}  // namespace stylo::ml
