#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "stylo/feature_matrix.hpp"

namespace stylo::ml {

/// Independent, reproducible seed for substream `stream` of `seed` (splitmix64 mix).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

/// Dense row-major matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
  std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }

  Matrix subset(std::span<const std::size_t> rows) const;
  static Matrix from(const FeatureMatrix& m);
};

struct LabeledDataset {
  FeatureMatrix matrix;
  std::vector<int> labels;               // index into class_names
  std::vector<std::string> class_names;  // sorted

  std::size_t n_classes() const { return class_names.size(); }
  std::vector<int> labels_for(std::span<const std::size_t> rows) const;
};

/// Reads `doc_id,label` rows (header required).
std::map<std::string, std::string> read_labels_csv(std::istream& in);

/// Joins features with labels by doc_id. Requires every row labeled, at least two classes
/// and at least two examples per class.
LabeledDataset make_dataset(FeatureMatrix matrix, const std::map<std::string, std::string>& labels);

struct SplitSpec {
  double train_fraction = 0.80;
  double test_fraction = 0.20;
  double validation_fraction = 0.15;  // of the training portion
  std::uint64_t seed = 42;
};

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> validation;
  std::vector<std::size_t> test;
};

/// Label-stratified, seed-deterministic three-way split. Per class: test = round(0.2 n)
/// (at least 1), validation = round(0.15 (n - test)), the rest trains (at least 1).
Split stratified_split(std::span<const int> labels, std::size_t n_classes, const SplitSpec& spec);

/// Per-feature z-score with statistics from the fitted rows. Zero-variance features map to 0.
class Standardizer {
 public:
  void fit(const Matrix& x);
  Matrix transform(const Matrix& x) const;
  void transform_row(std::span<const double> in, std::span<double> out) const;

  const std::vector<double>& mean() const { return mean_; }
  const std::vector<double>& scale() const { return scale_; }

 private:
  std::vector<double> mean_;
  std::vector<double> scale_;
};

}  // namespace stylo::ml
