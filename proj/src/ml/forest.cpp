#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "stylo/ml/models.hpp"
#include "stylo/parallel.hpp"

namespace stylo::ml {

int argmax(std::span<const double> v) {
  int best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = static_cast<int>(i);
  }
  return best;
}

namespace {

double gini(std::span<const double> counts, double total) {
  if (total <= 0.0) return 0.0;
  double s = 0.0;
  for (double c : counts) s += c * c;
  return 1.0 - s / (total * total);
}

struct SplitChoice {
  int feature = -1;
  double threshold = 0.0;
  double score = 0.0;  // weighted child impurity, lower is better
};

class TreeBuilder {
 public:
  TreeBuilder(const Matrix& x, std::span<const int> y, std::size_t n_classes, std::span<const int> counts,
              std::size_t max_features, std::size_t max_depth, std::size_t min_split, std::uint64_t seed,
              std::vector<DecisionTree::Node>& nodes)
      : x_(x), y_(y), k_(n_classes), w_(counts), max_features_(max_features), max_depth_(max_depth),
        min_split_(min_split), rng_(seed), nodes_(nodes) {}

  int build(std::vector<std::size_t> idx, std::size_t depth) {
    std::vector<double> hist(k_, 0.0);
    double total = 0.0;
    for (auto i : idx) {
      hist[y_[i]] += w_[i];
      total += w_[i];
    }
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back({});
    nodes_[id].proba = hist;
    for (auto& p : nodes_[id].proba) p /= total;

    double parent = gini(hist, total);
    bool stop = parent <= 0.0 || total < static_cast<double>(min_split_) || (max_depth_ != 0 && depth >= max_depth_);
    if (stop) return id;

    SplitChoice best = choose(idx, total, parent);
    if (best.feature < 0) return id;

    std::vector<std::size_t> left, right;
    for (auto i : idx) (x_.at(i, best.feature) <= best.threshold ? left : right).push_back(i);
    idx.clear();
    idx.shrink_to_fit();
    int l = build(std::move(left), depth + 1);
    int r = build(std::move(right), depth + 1);
    nodes_[id].feature = best.feature;
    nodes_[id].threshold = best.threshold;
    nodes_[id].left = l;
    nodes_[id].right = r;
    nodes_[id].proba.clear();
    return id;
  }

 private:
  // Draws features without replacement; if none of the first `max_features` yields a split,
  // keeps drawing until one does or all are exhausted.
  SplitChoice choose(const std::vector<std::size_t>& idx, double total, double parent) {
    std::vector<int> features(x_.cols);
    std::iota(features.begin(), features.end(), 0);
    SplitChoice best;
    best.score = parent;
    std::vector<std::size_t> order = idx;
    for (std::size_t drawn = 0; drawn < features.size(); ++drawn) {
      if (drawn >= max_features_ && best.feature >= 0) break;
      std::uniform_int_distribution<std::size_t> pick(drawn, features.size() - 1);
      std::swap(features[drawn], features[pick(rng_)]);
      int f = features[drawn];
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        double va = x_.at(a, f), vb = x_.at(b, f);
        return va < vb || (va == vb && a < b);
      });
      std::vector<double> left(k_, 0.0), right(k_, 0.0);
      for (auto i : order) right[y_[i]] += w_[i];
      double wl = 0.0;
      for (std::size_t p = 0; p + 1 < order.size(); ++p) {
        auto i = order[p];
        left[y_[i]] += w_[i];
        right[y_[i]] -= w_[i];
        wl += w_[i];
        double a = x_.at(i, f), b = x_.at(order[p + 1], f);
        if (!(a < b)) continue;
        double wr = total - wl;
        double score = (wl * gini(left, wl) + wr * gini(right, wr)) / total;
        if (score < best.score - 1e-12) {
          best.feature = f;
          best.score = score;
          best.threshold = a + (b - a) / 2.0;
          if (!(best.threshold < b)) best.threshold = a;
        }
      }
    }
    return best;
  }

  const Matrix& x_;
  std::span<const int> y_;
  std::size_t k_;
  std::span<const int> w_;
  std::size_t max_features_;
  std::size_t max_depth_;
  std::size_t min_split_;
  std::mt19937_64 rng_;
  std::vector<DecisionTree::Node>& nodes_;
};

}  // namespace

void DecisionTree::fit(const Matrix& x, std::span<const int> y, std::size_t n_classes, std::span<const int> sample_counts,
                       std::size_t max_features, std::size_t max_depth, std::size_t min_samples_split, std::uint64_t seed) {
  nodes_.clear();
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < x.rows; ++i) {
    if (sample_counts[i] > 0) idx.push_back(i);
  }
  if (idx.empty()) throw std::invalid_argument("decision tree: no training rows");
  TreeBuilder builder(x, y, n_classes, sample_counts, std::max<std::size_t>(1, max_features), max_depth,
                      std::max<std::size_t>(2, min_samples_split), seed, nodes_);
  builder.build(std::move(idx), 0);
}

std::span<const double> DecisionTree::predict_proba(std::span<const double> x) const {
  int n = 0;
  while (nodes_[n].feature >= 0) n = x[nodes_[n].feature] <= nodes_[n].threshold ? nodes_[n].left : nodes_[n].right;
  return nodes_[n].proba;
}

void RandomForest::fit(const Matrix& x, std::span<const int> y, std::size_t n_classes, const Hyperparams& hp) {
  if (hp.forest_trees == 0) throw std::invalid_argument("random forest needs at least one tree");
  n_classes_ = n_classes;
  std::size_t max_features = hp.max_features;
  if (max_features == 0) {
    max_features = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(x.cols))));
  }
  trees_.assign(hp.forest_trees, {});
  parallel_for(hp.forest_trees, hp.jobs, [&](std::size_t t) {
    std::mt19937_64 rng(substream_seed(hp.seed, 2 * t));
    std::uniform_int_distribution<std::size_t> draw(0, x.rows - 1);
    std::vector<int> counts(x.rows, 0);
    for (std::size_t i = 0; i < x.rows; ++i) ++counts[draw(rng)];
    trees_[t].fit(x, y, n_classes, counts, max_features, hp.max_depth, hp.min_samples_split, substream_seed(hp.seed, 2 * t + 1));
  });
  active_ = trees_.size();
}

std::vector<double> RandomForest::proba_prefix(std::span<const double> x, std::size_t n) const {
  std::vector<double> p(n_classes_, 0.0);
  for (std::size_t t = 0; t < n; ++t) {
    auto tp = trees_[t].predict_proba(x);
    for (std::size_t k = 0; k < n_classes_; ++k) p[k] += tp[k];
  }
  for (auto& v : p) v /= static_cast<double>(n);
  return p;
}

void RandomForest::select_size(const Matrix& x_val, std::span<const int> y_val, std::size_t step) {
  active_ = trees_.size();
  if (x_val.rows == 0 || step == 0) return;
  // accumulate tree votes incrementally so every candidate size costs one pass over new trees
  std::vector<double> sums(x_val.rows * n_classes_, 0.0);
  std::size_t best_size = trees_.size();
  double best_acc = -1.0;
  std::size_t done = 0;
  for (std::size_t size = std::min(step, trees_.size());; size = std::min(size + step, trees_.size())) {
    for (; done < size; ++done) {
      for (std::size_t r = 0; r < x_val.rows; ++r) {
        auto tp = trees_[done].predict_proba(x_val.row(r));
        for (std::size_t k = 0; k < n_classes_; ++k) sums[r * n_classes_ + k] += tp[k];
      }
    }
    std::size_t correct = 0;
    for (std::size_t r = 0; r < x_val.rows; ++r) {
      if (argmax({sums.data() + r * n_classes_, n_classes_}) == y_val[r]) ++correct;
    }
    double acc = static_cast<double>(correct) / static_cast<double>(x_val.rows);
    if (acc >= best_acc) {
      best_acc = acc;
      best_size = size;
    }
    if (size == trees_.size()) break;
  }
  active_ = best_size;
}

std::vector<double> RandomForest::predict_proba(std::span<const double> x) const { return proba_prefix(x, active_); }

}  // namespace stylo::ml
