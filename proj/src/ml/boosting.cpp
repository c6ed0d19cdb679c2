#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "stylo/ml/models.hpp"

namespace stylo::ml {

namespace {

struct StumpFit {
  AdaBoostSamme::Stump stump;
  double error = 0.0;
};

StumpFit best_stump(const Matrix& x, std::span<const int> y, std::size_t k, std::span<const double> w,
                    const std::vector<std::vector<std::size_t>>& sorted) {
  std::vector<double> total(k, 0.0);
  for (std::size_t i = 0; i < x.rows; ++i) total[y[i]] += w[i];
  double mass = std::accumulate(total.begin(), total.end(), 0.0);

  StumpFit best;
  int majority = argmax(total);
  best.stump.left = best.stump.right = majority;
  best.error = mass - total[majority];

  std::vector<double> left(k);
  for (std::size_t f = 0; f < x.cols; ++f) {
    const auto& order = sorted[f];
    std::fill(left.begin(), left.end(), 0.0);
    for (std::size_t p = 0; p + 1 < order.size(); ++p) {
      auto i = order[p];
      left[y[i]] += w[i];
      double a = x.at(i, f), b = x.at(order[p + 1], f);
      if (!(a < b)) continue;
      int lc = 0, rc = 0;
      double lbest = left[0], rbest = total[0] - left[0];
      for (std::size_t c = 1; c < k; ++c) {
        if (left[c] > lbest) lbest = left[c], lc = static_cast<int>(c);
        double rv = total[c] - left[c];
        if (rv > rbest) rbest = rv, rc = static_cast<int>(c);
      }
      double err = mass - lbest - rbest;
      if (err < best.error - 1e-12 * mass) {
        best.error = err;
        best.stump.feature = static_cast<int>(f);
        best.stump.threshold = a + (b - a) / 2.0;
        if (!(best.stump.threshold < b)) best.stump.threshold = a;
        best.stump.left = lc;
        best.stump.right = rc;
      }
    }
  }
  best.error = std::max(0.0, best.error / mass);
  return best;
}

int stump_predict(const AdaBoostSamme::Stump& s, std::span<const double> x) {
  if (s.feature < 0) return s.left;
  return x[s.feature] <= s.threshold ? s.left : s.right;
}

}  // namespace

void AdaBoostSamme::fit(const Matrix& x, std::span<const int> y, std::size_t n_classes, std::size_t rounds) {
  if (n_classes < 2) throw std::invalid_argument("boosting needs at least two classes");
  if (x.rows == 0) throw std::invalid_argument("boosting: no training rows");
  n_classes_ = n_classes;
  stumps_.clear();

  std::vector<std::vector<std::size_t>> sorted(x.cols, std::vector<std::size_t>(x.rows));
  for (std::size_t f = 0; f < x.cols; ++f) {
    auto& order = sorted[f];
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x.at(a, f) < x.at(b, f); });
  }

  const double k = static_cast<double>(n_classes);
  std::vector<double> w(x.rows, 1.0 / static_cast<double>(x.rows));
  for (std::size_t round = 0; round < std::max<std::size_t>(1, rounds); ++round) {
    StumpFit fit = best_stump(x, y, n_classes, w, sorted);
    if (fit.error <= 0.0) {
      // a perfect stump decides alone
      fit.stump.alpha = 1.0;
      stumps_.assign(1, fit.stump);
      return;
    }
    if (fit.error >= 1.0 - 1.0 / k) {
      // no better than chance; keep a single fallback so predictions are defined
      if (stumps_.empty()) {
        fit.stump.alpha = 1.0;
        stumps_.push_back(fit.stump);
      }
      return;
    }
    fit.stump.alpha = std::log((1.0 - fit.error) / fit.error) + std::log(k - 1.0);
    stumps_.push_back(fit.stump);
    double sum = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i) {
      if (stump_predict(fit.stump, x.row(i)) != y[i]) w[i] *= std::exp(fit.stump.alpha);
      sum += w[i];
    }
    for (auto& v : w) v /= sum;
  }
}

std::vector<double> AdaBoostSamme::predict_proba(std::span<const double> x) const {
  std::vector<double> score(n_classes_, 0.0);
  double norm = 0.0;
  for (const auto& s : stumps_) {
    score[stump_predict(s, x)] += s.alpha;
    norm += s.alpha;
  }
  double mx = -1e300;
  for (auto& v : score) {
    v = v / norm / static_cast<double>(n_classes_ - 1);
    mx = std::max(mx, v);
  }
  double z = 0.0;
  for (auto& v : score) z += (v = std::exp(v - mx));
  for (auto& v : score) v /= z;
  return score;
}

}  // namespace stylo::ml
