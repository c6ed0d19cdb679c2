#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stylo/pipeline.hpp"

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::vector<std::string> groups;
  std::vector<std::string> trace;
  std::string data_dir;
  unsigned jobs = 1;
  std::uint64_t seed = 42;
  std::string features;
  std::string labels;
  std::string report;
  std::size_t permutations = 200;
  std::size_t top_k = 10;
  std::size_t trees = 200;
  std::size_t rounds = 100;
  double learning_rate = 0.1;
  std::size_t patience = 10;
};

std::vector<std::string> non_empty(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& s : items) {
    auto a = s.find_first_not_of(' ');
    if (a != std::string::npos) out.push_back(s.substr(a, s.find_last_not_of(' ') - a + 1));
  }
  return out;
}

stylo::RunConfig to_config(const Options& o, const std::string& default_output) {
  stylo::RunConfig cfg;
  for (const auto& i : o.inputs) cfg.inputs.emplace_back(i);
  cfg.output = o.output.empty() ? default_output : o.output;
  cfg.groups = non_empty(o.groups);
  cfg.trace = non_empty(o.trace);
  cfg.data_dir = o.data_dir;
  cfg.jobs = o.jobs;
  cfg.seed = o.seed;
  cfg.features = o.features;
  cfg.labels = o.labels;
  cfg.report = o.report;
  cfg.permutations = o.permutations;
  cfg.top_k = o.top_k;
  cfg.hyper.forest_trees = o.trees;
  cfg.hyper.boosting_rounds = o.rounds;
  cfg.hyper.learning_rate = o.learning_rate;
  cfg.hyper.patience = o.patience;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ukrainian stylometric feature extraction"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file mirroring the long flags");
  app.get_config_formatter_base()->arrayDelimiter(',');

  Options o;
  app.add_option("--input", o.inputs, "CoNLL-U files or directories (extract, trace)");
  app.add_option("--output", o.output, "output directory (extract, catalog, trace)");
  app.add_option("--groups", o.groups, "comma list of lexical,grammar,syntax,pos")->delimiter(',');
  app.add_option("--trace", o.trace, "comma list of metric ids to trace")->delimiter(',');
  app.add_option("--data-dir", o.data_dir, "lexicon directory")->envname("STYLOMETRIX_DATA_DIR");
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--features", o.features, "features.csv (classify, explain)");
  app.add_option("--labels", o.labels, "labels.csv with doc_id,label (classify, explain)");
  app.add_option("--report", o.report, "report path (classify: report.tsv, explain: attribution tsv)");
  app.add_option("--trees", o.trees, "random forest size");
  app.add_option("--rounds", o.rounds, "boosting rounds");
  app.add_option("--learning-rate", o.learning_rate, "logistic regression step");
  app.add_option("--patience", o.patience, "early stopping patience");
  app.add_option("--permutations", o.permutations, "Shapley permutations per explained row")->check(CLI::PositiveNumber);
  app.add_option("--top-k", o.top_k, "ranked contributors to print");

  auto* extract = app.add_subcommand("extract", "compute features.csv (and catalog.tsv, traces) for CoNLL-U input");
  auto* catalog = app.add_subcommand("catalog", "write catalog.tsv");
  auto* trace = app.add_subcommand("trace", "list the tokens matched by metrics");
  auto* classify = app.add_subcommand("classify", "train and evaluate the voting ensemble");
  auto* explain = app.add_subcommand("explain", "Shapley attribution and per-class means");
  for (auto* sub : {extract, catalog, trace, classify, explain}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (*extract) return stylo::run_extract(to_config(o, "."), std::cerr);
  if (*catalog) return stylo::run_catalog(to_config(o, "."), std::cerr);
  if (*trace) return stylo::run_trace(to_config(o, ""), std::cout, std::cerr);
  if (*classify) return stylo::run_classify(to_config(o, ""), std::cout, std::cerr);
  if (*explain) return stylo::run_explain(to_config(o, ""), std::cout, std::cerr);
  return 2;
}
