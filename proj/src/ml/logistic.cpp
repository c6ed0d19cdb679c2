#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "stylo/ml/models.hpp"

namespace stylo::ml {

namespace {

void softmax_row(std::span<const double> w, std::span<const double> b, std::size_t k, std::size_t d,
                 std::span<const double> x, std::span<double> out) {
  double mx = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < k; ++c) {
    double z = b[c];
    for (std::size_t j = 0; j < d; ++j) z += w[c * d + j] * x[j];
    out[c] = z;
    mx = std::max(mx, z);
  }
  double s = 0.0;
  for (std::size_t c = 0; c < k; ++c) s += (out[c] = std::exp(out[c] - mx));
  for (std::size_t c = 0; c < k; ++c) out[c] /= s;
}

}  // namespace

void LogisticRegression::fit(const Matrix& x, std::span<const int> y, std::size_t n_classes, const Matrix& x_val,
                             std::span<const int> y_val, const Hyperparams& hp) {
  if (x.rows == 0) throw std::invalid_argument("logistic regression: no training rows");
  n_classes_ = n_classes;
  dim_ = x.cols;
  const std::size_t k = n_classes, d = x.cols;
  weights_.assign(k * d, 0.0);
  bias_.assign(k, 0.0);

  auto val_loss = [&] {
    std::vector<double> p(k);
    double loss = 0.0;
    for (std::size_t r = 0; r < x_val.rows; ++r) {
      softmax_row(weights_, bias_, k, d, x_val.row(r), p);
      loss -= std::log(std::max(p[y_val[r]], 1e-15));
    }
    return loss / static_cast<double>(x_val.rows);
  };

  const bool early = x_val.rows > 0;
  double best = early ? val_loss() : 0.0;
  auto best_w = weights_;
  auto best_b = bias_;
  best_epoch_ = 0;
  std::size_t stale = 0;

  std::vector<double> gw(k * d), gb(k), p(k);
  const double n = static_cast<double>(x.rows);
  for (epochs_ = 1; epochs_ <= hp.max_epochs; ++epochs_) {
    std::fill(gw.begin(), gw.end(), 0.0);
    std::fill(gb.begin(), gb.end(), 0.0);
    for (std::size_t r = 0; r < x.rows; ++r) {
      auto row = x.row(r);
      softmax_row(weights_, bias_, k, d, row, p);
      p[y[r]] -= 1.0;
      for (std::size_t c = 0; c < k; ++c) {
        gb[c] += p[c];
        for (std::size_t j = 0; j < d; ++j) gw[c * d + j] += p[c] * row[j];
      }
    }
    for (std::size_t i = 0; i < k * d; ++i) weights_[i] -= hp.learning_rate * (gw[i] / n + hp.l2 * weights_[i]);
    for (std::size_t c = 0; c < k; ++c) bias_[c] -= hp.learning_rate * gb[c] / n;

    if (!early) continue;
    double loss = val_loss();
    if (loss < best - 1e-9) {
      best = loss;
      best_w = weights_;
      best_b = bias_;
      best_epoch_ = epochs_;
      stale = 0;
    } else if (++stale >= hp.patience) {
      break;
    }
  }
  epochs_ = std::min(epochs_, hp.max_epochs);
  if (early) {
    weights_ = std::move(best_w);
    bias_ = std::move(best_b);
  } else {
    best_epoch_ = epochs_;
  }
}

std::vector<double> LogisticRegression::predict_proba(std::span<const double> x) const {
  std::vector<double> p(n_classes_);
  softmax_row(weights_, bias_, n_classes_, dim_, x, p);
  return p;
}

}  // namespace stylo::ml
