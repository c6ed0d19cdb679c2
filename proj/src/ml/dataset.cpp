#include "stylo/ml/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <random>
#include <set>
#include <stdexcept>

#include "stylo/text.hpp"

namespace stylo::ml {

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Matrix Matrix::subset(std::span<const std::size_t> rows_idx) const {
  Matrix out(rows_idx.size(), cols);
  for (std::size_t i = 0; i < rows_idx.size(); ++i) {
    auto src = row(rows_idx[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

Matrix Matrix::from(const FeatureMatrix& m) {
  Matrix out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.data = m.values;
  return out;
}

std::vector<int> LabeledDataset::labels_for(std::span<const std::size_t> rows) const {
  std::vector<int> out;
  out.reserve(rows.size());
  for (auto r : rows) out.push_back(labels[r]);
  return out;
}

std::map<std::string, std::string> read_labels_csv(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t line_no = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto cells = split(line, ',');
    if (header) {
      if (cells.size() != 2 || cells[0] != "doc_id" || cells[1] != "label") {
        throw std::runtime_error("labels csv: header must be 'doc_id,label'");
      }
      header = false;
      continue;
    }
    if (cells.size() != 2) throw std::runtime_error("labels csv line " + std::to_string(line_no) + ": expected 2 cells");
    std::string id = decode_doc_id(cells[0]);
    if (!out.emplace(id, cells[1]).second) {
      throw std::runtime_error("labels csv line " + std::to_string(line_no) + ": duplicate doc_id " + id);
    }
  }
  return out;
}

LabeledDataset make_dataset(FeatureMatrix matrix, const std::map<std::string, std::string>& labels) {
  LabeledDataset ds;
  std::set<std::string> names;
  for (const auto& id : matrix.doc_ids) {
    auto it = labels.find(id);
    if (it == labels.end()) throw std::runtime_error("no label for document " + id);
    names.insert(it->second);
  }
  ds.class_names.assign(names.begin(), names.end());
  std::vector<std::size_t> counts(ds.class_names.size(), 0);
  for (const auto& id : matrix.doc_ids) {
    auto pos = std::lower_bound(ds.class_names.begin(), ds.class_names.end(), labels.at(id)) - ds.class_names.begin();
    ds.labels.push_back(static_cast<int>(pos));
    ++counts[pos];
  }
  if (ds.class_names.size() < 2) throw std::runtime_error("dataset needs at least two classes");
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] < 2) throw std::runtime_error("class '" + ds.class_names[c] + "' has fewer than two examples");
  }
  ds.matrix = std::move(matrix);
  return ds;
}

Split stratified_split(std::span<const int> labels, std::size_t n_classes, const SplitSpec& spec) {
  std::vector<std::vector<std::size_t>> by_class(n_classes);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || static_cast<std::size_t>(labels[i]) >= n_classes) throw std::invalid_argument("label out of range");
    by_class[labels[i]].push_back(i);
  }
  std::mt19937_64 rng(spec.seed);
  Split split;
  for (std::size_t c = 0; c < n_classes; ++c) {
    auto& idx = by_class[c];
    const std::size_t n = idx.size();
    if (n == 0) continue;
    if (n < 2) throw std::invalid_argument("class " + std::to_string(c) + " has " + std::to_string(n) + " example(s); a split needs at least 2");
    std::shuffle(idx.begin(), idx.end(), rng);
    std::size_t n_test = std::clamp<std::size_t>(static_cast<std::size_t>(std::lround(spec.test_fraction * static_cast<double>(n))), 1, n - 1);
    std::size_t n_rest = n - n_test;
    std::size_t n_val = std::min<std::size_t>(static_cast<std::size_t>(std::lround(spec.validation_fraction * static_cast<double>(n_rest))), n_rest - 1);
    split.test.insert(split.test.end(), idx.begin(), idx.begin() + n_test);
    split.validation.insert(split.validation.end(), idx.begin() + n_test, idx.begin() + n_test + n_val);
    split.train.insert(split.train.end(), idx.begin() + n_test + n_val, idx.end());
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.validation.begin(), split.validation.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

void Standardizer::fit(const Matrix& x) {
  mean_.assign(x.cols, 0.0);
  scale_.assign(x.cols, 0.0);
  if (x.rows == 0) return;
  for (std::size_t r = 0; r < x.rows; ++r) {
    for (std::size_t c = 0; c < x.cols; ++c) mean_[c] += x.at(r, c);
  }
  for (auto& m : mean_) m /= static_cast<double>(x.rows);
  std::vector<double> var(x.cols, 0.0);
  for (std::size_t r = 0; r < x.rows; ++r) {
    for (std::size_t c = 0; c < x.cols; ++c) {
      double d = x.at(r, c) - mean_[c];
      var[c] += d * d;
    }
  }
  for (std::size_t c = 0; c < x.cols; ++c) {
    double sd = std::sqrt(var[c] / static_cast<double>(x.rows));
    scale_[c] = sd > 1e-12 ? sd : 0.0;
  }
}

void Standardizer::transform_row(std::span<const double> in, std::span<double> out) const {
  for (std::size_t c = 0; c < in.size(); ++c) out[c] = scale_[c] == 0.0 ? 0.0 : (in[c] - mean_[c]) / scale_[c];
}

Matrix Standardizer::transform(const Matrix& x) const {
  Matrix out(x.rows, x.cols);
  for (std::size_t r = 0; r < x.rows; ++r) transform_row(x.row(r), out.row(r));
  return out;
}

}  // namespace stylo::ml
