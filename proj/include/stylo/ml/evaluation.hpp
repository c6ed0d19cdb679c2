#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stylo/ml/dataset.hpp"

namespace stylo::ml {

/// Unweighted mean of per-class F1 over classes 0..n_classes-1. A class with no gold and no
/// predicted examples still counts, with F1 = 0. Throws std::invalid_argument on length mismatch
/// or out-of-range labels.
double macro_f1(std::span<const int> predictions, std::span<const int> gold, std::size_t n_classes);

/// Class universe = labels seen in either vector.
double macro_f1(std::span<const int> predictions, std::span<const int> gold);

double accuracy(std::span<const int> predictions, std::span<const int> gold);

/// Mean raw metric value over the rows of `class_id`. Throws std::out_of_range for an unknown
/// class or one without rows.
std::vector<std::pair<std::string, double>> class_means(const LabeledDataset& ds, int class_id);

}  // namespace stylo::ml
