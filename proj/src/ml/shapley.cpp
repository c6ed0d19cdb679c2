#include "stylo/ml/shapley.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "stylo/ml/evaluation.hpp"
#include "stylo/parallel.hpp"

namespace stylo::ml {

double ShapleyEstimate::efficiency_gap() const {
  return std::accumulate(values.begin(), values.end(), 0.0) - (prediction - base_value);
}

bool ShapleyEstimate::efficient(double n_se) const {
  return std::abs(efficiency_gap()) <= n_se * total_std_error + 1e-9 * (1.0 + std::abs(prediction));
}

ShapleyEstimate estimate_shapley(const ScalarModel& f, const Matrix& background, std::span<const double> x,
                                 const ShapleyOptions& opt) {
  if (background.rows == 0) throw std::invalid_argument("shapley: empty background");
  if (background.cols != x.size()) throw std::invalid_argument("shapley: background and row differ in width");
  if (opt.permutations == 0) throw std::invalid_argument("shapley: need at least one permutation");
  const std::size_t d = x.size();
  const std::size_t pairs = (opt.permutations + 1) / 2;

  std::vector<std::size_t> cycle(background.rows);
  std::iota(cycle.begin(), cycle.end(), 0);
  std::mt19937_64 order_rng(substream_seed(opt.seed, 0));
  std::shuffle(cycle.begin(), cycle.end(), order_rng);

  ShapleyEstimate est;
  est.prediction = f(x);
  std::vector<double> f_background(background.rows);
  for (std::size_t b = 0; b < background.rows; ++b) f_background[b] = f(background.row(b));
  est.base_value = std::accumulate(f_background.begin(), f_background.end(), 0.0) / static_cast<double>(background.rows);

  // per-pair mean contributions; the last pair of an odd count has a single permutation
  std::vector<double> contrib(pairs * d, 0.0);
  std::vector<double> totals(pairs, 0.0);
  parallel_for(pairs, opt.jobs, [&](std::size_t p) {
    std::mt19937_64 rng(substream_seed(opt.seed, p + 1));
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::size_t b = cycle[p % background.rows];
    std::vector<double> z(d);
    double* out = contrib.data() + p * d;
    std::size_t walks = (2 * p + 1 < opt.permutations) ? 2 : 1;
    for (std::size_t walk = 0; walk < walks; ++walk) {
      auto src = background.row(b);
      std::copy(src.begin(), src.end(), z.begin());
      double prev = f_background[b];
      for (std::size_t s = 0; s < d; ++s) {
        std::size_t j = walk == 0 ? perm[s] : perm[d - 1 - s];
        if (z[j] == x[j]) continue;  // unchanged input, zero marginal contribution
        z[j] = x[j];
        double cur = s + 1 == d ? est.prediction : f(z);
        out[j] += cur - prev;
        prev = cur;
      }
    }
    for (std::size_t j = 0; j < d; ++j) out[j] /= static_cast<double>(walks);
    totals[p] = est.prediction - f_background[b];
  });

  est.values.assign(d, 0.0);
  est.std_errors.assign(d, 0.0);
  const double n = static_cast<double>(pairs);
  for (std::size_t p = 0; p < pairs; ++p) {
    for (std::size_t j = 0; j < d; ++j) est.values[j] += contrib[p * d + j];
  }
  for (auto& v : est.values) v /= n;
  if (pairs > 1) {
    for (std::size_t p = 0; p < pairs; ++p) {
      for (std::size_t j = 0; j < d; ++j) {
        double dv = contrib[p * d + j] - est.values[j];
        est.std_errors[j] += dv * dv;
      }
    }
    for (auto& s : est.std_errors) s = std::sqrt(s / (n - 1.0) / n);
    double mean_total = std::accumulate(totals.begin(), totals.end(), 0.0) / n;
    double var = 0.0;
    for (double t : totals) var += (t - mean_total) * (t - mean_total);
    est.total_std_error = std::sqrt(var / (n - 1.0) / n);
  }
  return est;
}

namespace {

std::vector<AttributionEntry> ranked(const std::vector<AttributionEntry>& entries, std::size_t k, bool positive) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    double v = entries[i].shapley_mean;
    if (positive ? v > 0.0 : v < 0.0) idx.push_back(i);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return positive ? entries[a].shapley_mean > entries[b].shapley_mean : entries[a].shapley_mean < entries[b].shapley_mean;
  });
  if (idx.size() > k) idx.resize(k);
  std::vector<AttributionEntry> out;
  for (auto i : idx) out.push_back(entries[i]);
  return out;
}

}  // namespace

std::vector<AttributionEntry> ClassAttribution::top_positive(std::size_t k) const { return ranked(entries, k, true); }
std::vector<AttributionEntry> ClassAttribution::top_negative(std::size_t k) const { return ranked(entries, k, false); }

AttributionReport shapley_attribution(const VotingModel& model, const LabeledDataset& ds,
                                      std::span<const std::size_t> background_rows,
                                      std::span<const std::size_t> target_rows, const ShapleyOptions& opt) {
  if (background_rows.empty()) throw std::invalid_argument("shapley: empty background");
  Matrix all = Matrix::from(ds.matrix);
  Matrix background = all.subset(background_rows);

  AttributionReport report;
  for (std::size_t c = 0; c < ds.n_classes(); ++c) {
    ClassAttribution ca;
    ca.class_id = static_cast<int>(c);
    ca.class_name = ds.class_names[c];
    auto means = class_means(ds, ca.class_id);
    for (auto& [id, mean] : means) ca.entries.push_back({id, 0.0, mean});
    report.classes.push_back(std::move(ca));
  }

  for (auto r : target_rows) {
    int c = ds.labels[r];
    ScalarModel f = [&model, c](std::span<const double> row) { return model.predict_proba(row)[c]; };
    ShapleyEstimate est = estimate_shapley(f, background, all.row(r), opt);
    auto& ca = report.classes[c];
    for (std::size_t j = 0; j < est.values.size(); ++j) ca.entries[j].shapley_mean += est.values[j];
    ca.mean_base_value += est.base_value;
    ca.rows_explained += 1;
    if (!est.efficient()) ca.efficiency_violations += 1;
  }
  for (auto& ca : report.classes) {
    if (ca.rows_explained == 0) continue;
    double n = static_cast<double>(ca.rows_explained);
    for (auto& e : ca.entries) e.shapley_mean /= n;
    ca.mean_base_value /= n;
  }
  return report;
}

}  // namespace stylo::ml
