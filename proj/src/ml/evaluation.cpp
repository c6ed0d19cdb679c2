#include "stylo/ml/evaluation.hpp"

#include <algorithm>
#include <stdexcept>

namespace stylo::ml {

double macro_f1(std::span<const int> predictions, std::span<const int> gold, std::size_t n_classes) {
  if (predictions.size() != gold.size()) throw std::invalid_argument("macro_f1: length mismatch");
  if (n_classes == 0) throw std::invalid_argument("macro_f1: empty class universe");
  std::vector<double> tp(n_classes, 0.0), fp(n_classes, 0.0), fn(n_classes, 0.0);
  for (std::size_t i = 0; i < gold.size(); ++i) {
    int p = predictions[i], g = gold[i];
    if (p < 0 || g < 0 || static_cast<std::size_t>(p) >= n_classes || static_cast<std::size_t>(g) >= n_classes) {
      throw std::invalid_argument("macro_f1: label outside the class universe");
    }
    if (p == g) {
      tp[p] += 1;
    } else {
      fp[p] += 1;
      fn[g] += 1;
    }
  }
  double sum = 0.0;
  for (std::size_t c = 0; c < n_classes; ++c) {
    double denom = 2 * tp[c] + fp[c] + fn[c];
    sum += denom > 0 ? 2 * tp[c] / denom : 0.0;
  }
  return sum / static_cast<double>(n_classes);
}

double macro_f1(std::span<const int> predictions, std::span<const int> gold) {
  if (predictions.size() != gold.size()) throw std::invalid_argument("macro_f1: length mismatch");
  std::vector<int> seen(predictions.begin(), predictions.end());
  seen.insert(seen.end(), gold.begin(), gold.end());
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  if (seen.empty()) throw std::invalid_argument("macro_f1: no labels");
  auto remap = [&](std::span<const int> v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (int x : v) out.push_back(static_cast<int>(std::lower_bound(seen.begin(), seen.end(), x) - seen.begin()));
    return out;
  };
  return macro_f1(remap(predictions), remap(gold), seen.size());
}

double accuracy(std::span<const int> predictions, std::span<const int> gold) {
  if (predictions.size() != gold.size()) throw std::invalid_argument("accuracy: length mismatch");
  if (gold.empty()) return 0.0;
  std::size_t ok = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) ok += predictions[i] == gold[i];
  return static_cast<double>(ok) / static_cast<double>(gold.size());
}

std::vector<std::pair<std::string, double>> class_means(const LabeledDataset& ds, int class_id) {
  if (class_id < 0 || static_cast<std::size_t>(class_id) >= ds.n_classes()) {
    throw std::out_of_range("unknown class " + std::to_string(class_id));
  }
  const auto& m = ds.matrix;
  std::vector<double> sum(m.cols(), 0.0);
  std::size_t n = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (ds.labels[r] != class_id) continue;
    ++n;
    for (std::size_t c = 0; c < m.cols(); ++c) sum[c] += m.at(r, c);
  }
  if (n == 0) throw std::out_of_range("class " + ds.class_names[class_id] + " has no rows");
  std::vector<std::pair<std::string, double>> out;
  out.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out.emplace_back(m.metric_ids[c], sum[c] / static_cast<double>(n));
  return out;
}

}  // namespace stylo::ml
