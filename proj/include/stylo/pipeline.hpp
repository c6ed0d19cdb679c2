#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "stylo/feature_matrix.hpp"
#include "stylo/lexicon.hpp"
#include "stylo/metrics.hpp"
#include "stylo/ml/dataset.hpp"
#include "stylo/ml/models.hpp"
#include "stylo/ml/shapley.hpp"

namespace stylo {

/// Loaded lexicons, rules and the metric registry for one data directory.
class Engine {
 public:
  explicit Engine(const std::filesystem::path& data_dir = default_data_dir());

  const MorphologyRules& rules() const { return rules_; }
  const MetricRegistry& registry() const { return registry_; }
  const std::filesystem::path& data_dir() const { return data_dir_; }

  /// Registry restricted to the named groups (all when empty). Throws std::invalid_argument
  /// for an unknown group name.
  MetricRegistry select(const std::vector<std::string>& groups) const;

 private:
  std::filesystem::path data_dir_;
  MorphologyRules rules_;
  MetricRegistry registry_;
};

void write_catalog(std::ostream& out, const MetricRegistry& registry);
void write_trace(std::ostream& out, std::span<const MatchTrace> traces);

struct RunConfig {
  std::vector<std::filesystem::path> inputs;  // .conllu files or directories of them
  std::filesystem::path output = ".";         // output directory (extract, catalog, trace)
  std::vector<std::string> groups;
  std::vector<std::string> trace;  // metric ids
  std::filesystem::path data_dir;  // empty: default_data_dir()
  unsigned jobs = 1;
  std::uint64_t seed = 42;

  std::filesystem::path features;  // classify / explain
  std::filesystem::path labels;
  std::filesystem::path report;  // classify: report.tsv, explain: attribution tsv
  std::size_t permutations = 200;
  std::size_t top_k = 10;
  ml::Hyperparams hyper;
};

/// Expands directories (sorted *.conllu) and parses every file. Failures are appended to
/// `errors` as "file: message" and the file is skipped.
std::vector<Document> load_corpus(const std::vector<std::filesystem::path>& inputs, std::vector<std::string>& errors);

/// Each returns a process exit status and reports problems on `err`.
int run_extract(const RunConfig& cfg, std::ostream& err);
int run_catalog(const RunConfig& cfg, std::ostream& err);
int run_trace(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_explain(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// The classify experiment: stratified split, voting ensemble, macro-F1 on the test part.
struct Experiment {
  ml::LabeledDataset dataset;
  ml::Split split;
  ml::VotingModel model;
  std::vector<int> test_predictions;
  double test_macro_f1 = 0.0;
  double test_accuracy = 0.0;
  double validation_macro_f1 = 0.0;
};

Experiment run_experiment(ml::LabeledDataset dataset, std::uint64_t seed, const ml::Hyperparams& hp);

void write_report(std::ostream& out, const Experiment& exp, const ml::Hyperparams& hp, std::uint64_t seed);
void write_attribution(std::ostream& out, const ml::AttributionReport& report, const MetricRegistry& registry);

}  // namespace stylo
