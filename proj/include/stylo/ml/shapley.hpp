#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "stylo/ml/dataset.hpp"
#include "stylo/ml/models.hpp"

namespace stylo::ml {

using ScalarModel = std::function<double(std::span<const double>)>;

struct ShapleyOptions {
  std::size_t permutations = 2000;
  std::uint64_t seed = 7;
  unsigned jobs = 1;
};

struct ShapleyEstimate {
  std::vector<double> values;
  std::vector<double> std_errors;
  double prediction = 0.0;  // f(x)
  double base_value = 0.0;  // mean of f over the background
  double total_std_error = 0.0;

  /// sum(values) - (prediction - base_value)
  double efficiency_gap() const;
  bool efficient(double n_se = 3.0) const;
};

/// Permutation-sampling Shapley values of f at x, with features outside the coalition drawn
/// from background rows (interventional). Permutations come in antithetic pairs (a random
/// order and its reverse) that share one background row; background rows are cycled in a
/// seeded order so every row is used equally often. Each pair draws from its own seeded
/// substream, so the estimate is independent of `jobs`.
/// Throws std::invalid_argument for an empty background, a dimension mismatch or zero permutations.
ShapleyEstimate estimate_shapley(const ScalarModel& f, const Matrix& background, std::span<const double> x,
                                 const ShapleyOptions& opt);

struct AttributionEntry {
  std::string metric_id;
  double shapley_mean = 0.0;
  double class_mean = 0.0;
};

struct ClassAttribution {
  int class_id = 0;
  std::string class_name;
  std::size_t rows_explained = 0;
  std::size_t efficiency_violations = 0;
  double mean_base_value = 0.0;
  std::vector<AttributionEntry> entries;  // feature order

  /// Largest positive / most negative mean contributions, ties broken by feature order.
  std::vector<AttributionEntry> top_positive(std::size_t k) const;
  std::vector<AttributionEntry> top_negative(std::size_t k) const;
};

struct AttributionReport {
  std::vector<ClassAttribution> classes;
};

/// Explains P(class = gold label) for every target row; per class, averages the attributions
/// of its target rows and pairs them with the class mean of the raw metric over all of its rows.
AttributionReport shapley_attribution(const VotingModel& model, const LabeledDataset& ds,
                                      std::span<const std::size_t> background_rows,
                                      std::span<const std::size_t> target_rows, const ShapleyOptions& opt);

}  // namespace stylo::ml
