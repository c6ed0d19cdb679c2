#include "stylo/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "stylo/ml/evaluation.hpp"

namespace stylo {

namespace fs = std::filesystem;

namespace {

fs::path resolve_data_dir(const fs::path& p) { return p.empty() ? default_data_dir() : p; }

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void close_checked(std::ofstream& out, const fs::path& path) {
  out.close();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::ifstream open_in(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return in;
}

ml::LabeledDataset load_dataset(const RunConfig& cfg) {
  if (cfg.features.empty() || cfg.labels.empty()) throw std::runtime_error("--features and --labels are required");
  auto fin = open_in(cfg.features);
  auto lin = open_in(cfg.labels);
  return ml::make_dataset(read_csv(fin), ml::read_labels_csv(lin));
}

}  // namespace

Engine::Engine(const fs::path& data_dir)
    : data_dir_(data_dir), rules_(LanguageData::load(data_dir)), registry_(builtin_registry(rules_.shared_data())) {}

MetricRegistry Engine::select(const std::vector<std::string>& groups) const {
  if (groups.empty()) return registry_;
  std::vector<MetricGroup> chosen;
  for (const auto& name : groups) {
    auto g = parse_group(name);
    if (!g) throw std::invalid_argument("unknown metric group '" + name + "' (expected lexical, grammar, syntax or pos)");
    if (std::find(chosen.begin(), chosen.end(), *g) == chosen.end()) chosen.push_back(*g);
  }
  return registry_.select(chosen);
}

void write_catalog(std::ostream& out, const MetricRegistry& registry) {
  out << "# group\tdeclared\tactual\n";
  for (auto g : {MetricGroup::Lexical, MetricGroup::Grammar, MetricGroup::Syntax, MetricGroup::Pos}) {
    out << "# " << to_string(g) << '\t' << declared_group_size(g) << '\t' << registry.group_size(g) << '\n';
  }
  out << "id\tgroup\tdescription\tscope\n";
  for (const auto& m : registry.metrics()) {
    out << m.id << '\t' << to_string(m.group) << '\t' << m.description << '\t' << to_string(m.scope) << '\n';
  }
}

void write_trace(std::ostream& out, std::span<const MatchTrace> traces) {
  out << "doc_id\tsent_id\ttoken_index\tform\n";
  for (const auto& t : traces) {
    for (const auto& m : t.matched) out << t.doc_id << '\t' << m.sent_id << '\t' << m.index << '\t' << m.form << '\n';
  }
}

std::vector<Document> load_corpus(const std::vector<fs::path>& inputs, std::vector<std::string>& errors) {
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (fs::is_directory(in, ec)) {
      std::vector<fs::path> found;
      for (const auto& e : fs::directory_iterator(in)) {
        if (e.is_regular_file() && e.path().extension() == ".conllu") found.push_back(e.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(in);
    }
  }
  std::vector<Document> docs;
  for (const auto& f : files) {
    try {
      auto part = read_conllu_file(f);
      for (auto& d : part) docs.push_back(std::move(d));
    } catch (const ValidationError& e) {
      errors.push_back(f.string() + ": " + e.what());
    } catch (const std::exception& e) {
      errors.push_back(std::string(e.what()));
    }
  }
  return docs;
}

int run_extract(const RunConfig& cfg, std::ostream& err) {
  try {
    if (cfg.inputs.empty()) throw std::runtime_error("no input given (--input)");
    Engine engine(resolve_data_dir(cfg.data_dir));
    MetricRegistry registry = engine.select(cfg.groups);
    for (const auto& id : cfg.trace) {
      if (!registry.find(id)) throw std::runtime_error("unknown metric for --trace: " + id);
    }

    std::vector<std::string> errors;
    std::vector<Document> docs = load_corpus(cfg.inputs, errors);
    std::map<std::string, int> seen;
    for (const auto& d : docs) {
      if (++seen[d.doc_id] == 2) errors.push_back("duplicate document id " + d.doc_id);
    }
    if (!errors.empty()) {
      err << "extract failed for " << errors.size() << " input(s):\n";
      for (const auto& e : errors) err << "  " << e << '\n';
      return 1;
    }
    if (docs.empty()) throw std::runtime_error("no documents found");

    FeatureMatrix m = compute_matrix(docs, registry, engine.rules(), cfg.jobs);
    auto features_path = cfg.output / "features.csv";
    auto out = open_out(features_path);
    write_csv(out, m);
    close_checked(out, features_path);

    auto catalog_path = cfg.output / "catalog.tsv";
    auto cat = open_out(catalog_path);
    write_catalog(cat, registry);
    close_checked(cat, catalog_path);

    for (const auto& id : cfg.trace) {
      std::vector<MatchTrace> traces;
      for (const auto& d : docs) traces.push_back(explain_matches(analyze(d, engine.rules()), registry, id));
      auto path = cfg.output / ("trace_" + id + ".tsv");
      auto tout = open_out(path);
      write_trace(tout, traces);
      close_checked(tout, path);
    }
    return 0;
  } catch (const std::exception& e) {
    err << "extract: " << e.what() << '\n';
    return 1;
  }
}

int run_catalog(const RunConfig& cfg, std::ostream& err) {
  try {
    Engine engine(resolve_data_dir(cfg.data_dir));
    auto path = cfg.output / "catalog.tsv";
    auto out = open_out(path);
    write_catalog(out, engine.select(cfg.groups));
    close_checked(out, path);
    return 0;
  } catch (const std::exception& e) {
    err << "catalog: " << e.what() << '\n';
    return 1;
  }
}

int run_trace(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.trace.empty()) throw std::runtime_error("no metric given (--trace)");
    Engine engine(resolve_data_dir(cfg.data_dir));
    std::vector<std::string> errors;
    auto docs = load_corpus(cfg.inputs, errors);
    if (!errors.empty()) {
      for (const auto& e : errors) err << "  " << e << '\n';
      return 1;
    }
    std::vector<AnalyzedDocument> analyzed;
    for (const auto& d : docs) analyzed.push_back(analyze(d, engine.rules()));
    for (const auto& id : cfg.trace) {
      std::vector<MatchTrace> traces;
      for (const auto& a : analyzed) traces.push_back(explain_matches(a, engine.registry(), id));
      if (cfg.output.empty()) {
        write_trace(out, traces);
      } else {
        auto path = cfg.output / ("trace_" + id + ".tsv");
        auto f = open_out(path);
        write_trace(f, traces);
        close_checked(f, path);
      }
    }
    return 0;
  } catch (const std::out_of_range& e) {
    err << "trace: unknown metric (" << e.what() << ")\n";
    return 1;
  } catch (const std::exception& e) {
    err << "trace: " << e.what() << '\n';
    return 1;
  }
}

Experiment run_experiment(ml::LabeledDataset dataset, std::uint64_t seed, const ml::Hyperparams& hp) {
  Experiment exp;
  exp.dataset = std::move(dataset);
  ml::SplitSpec spec;
  spec.seed = seed;
  exp.split = ml::stratified_split(exp.dataset.labels, exp.dataset.n_classes(), spec);
  ml::Matrix all = ml::Matrix::from(exp.dataset.matrix);
  ml::Matrix xtr = all.subset(exp.split.train), xva = all.subset(exp.split.validation), xte = all.subset(exp.split.test);
  auto ytr = exp.dataset.labels_for(exp.split.train);
  auto yva = exp.dataset.labels_for(exp.split.validation);
  auto yte = exp.dataset.labels_for(exp.split.test);
  ml::Hyperparams h = hp;
  h.seed = seed;
  exp.model = ml::train_voting(xtr, ytr, xva, yva, exp.dataset.n_classes(), h);
  exp.test_predictions = exp.model.predict(xte);
  exp.test_macro_f1 = ml::macro_f1(exp.test_predictions, yte, exp.dataset.n_classes());
  exp.test_accuracy = ml::accuracy(exp.test_predictions, yte);
  if (xva.rows > 0) exp.validation_macro_f1 = ml::macro_f1(exp.model.predict(xva), yva, exp.dataset.n_classes());
  return exp;
}

void write_report(std::ostream& out, const Experiment& exp, const ml::Hyperparams& hp, std::uint64_t seed) {
  const auto& ds = exp.dataset;
  auto yte = ds.labels_for(exp.split.test);
  out << "key\tvalue\n";
  out << "seed\t" << seed << '\n';
  out << "documents\t" << ds.matrix.rows() << '\n';
  out << "features\t" << ds.matrix.cols() << '\n';
  out << "classes\t" << ds.n_classes() << '\n';
  out << "train\t" << exp.split.train.size() << '\n';
  out << "validation\t" << exp.split.validation.size() << '\n';
  out << "test\t" << exp.split.test.size() << '\n';
  out << "forest_trees\t" << exp.model.forest().total_trees() << '\n';
  out << "forest_trees_selected\t" << exp.model.forest().active_trees() << '\n';
  out << "boosting_rounds\t" << hp.boosting_rounds << '\n';
  out << "boosting_stumps\t" << exp.model.boosting().stumps().size() << '\n';
  out << "logistic_learning_rate\t" << format_double(hp.learning_rate) << '\n';
  out << "logistic_epochs\t" << exp.model.logistic().epochs_run() << '\n';
  out << "logistic_best_epoch\t" << exp.model.logistic().best_epoch() << '\n';
  out << "validation_macro_f1\t" << format_double(exp.validation_macro_f1) << '\n';
  out << "test_accuracy\t" << format_double(exp.test_accuracy) << '\n';
  out << "test_macro_f1\t" << format_double(exp.test_macro_f1) << '\n';
  for (std::size_t c = 0; c < ds.n_classes(); ++c) {
    std::vector<int> p, g;
    for (std::size_t i = 0; i < yte.size(); ++i) {
      p.push_back(exp.test_predictions[i] == static_cast<int>(c));
      g.push_back(yte[i] == static_cast<int>(c));
    }
    double tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      tp += p[i] && g[i];
      fp += p[i] && !g[i];
      fn += !p[i] && g[i];
    }
    double denom = 2 * tp + fp + fn;
    out << "f1[" << ds.class_names[c] << "]\t" << format_double(denom > 0 ? 2 * tp / denom : 0.0) << '\n';
  }
  for (std::size_t i = 0; i < exp.split.test.size(); ++i) {
    std::size_t r = exp.split.test[i];
    out << "prediction[" << ds.matrix.doc_ids[r] << "]\t" << ds.class_names[exp.test_predictions[i]] << '\n';
  }
}

int run_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Experiment exp = run_experiment(load_dataset(cfg), cfg.seed, [&] {
      auto h = cfg.hyper;
      h.jobs = cfg.jobs;
      return h;
    }());
    if (cfg.report.empty()) {
      write_report(out, exp, cfg.hyper, cfg.seed);
    } else {
      auto f = open_out(cfg.report);
      write_report(f, exp, cfg.hyper, cfg.seed);
      close_checked(f, cfg.report);
      out << "test macro-F1 " << format_double(exp.test_macro_f1) << " (" << exp.split.train.size() << " train / "
          << exp.split.validation.size() << " validation / " << exp.split.test.size() << " test)\n";
    }
    return 0;
  } catch (const std::exception& e) {
    err << "classify: " << e.what() << '\n';
    return 1;
  }
}

void write_attribution(std::ostream& out, const ml::AttributionReport& report, const MetricRegistry& registry) {
  out << "class\tmetric_id\tshapley_mean\tclass_mean\tdescription\n";
  for (const auto& ca : report.classes) {
    for (const auto& e : ca.entries) {
      const MetricSpec* spec = registry.find(e.metric_id);
      out << ca.class_name << '\t' << e.metric_id << '\t' << format_double(e.shapley_mean) << '\t'
          << format_double(e.class_mean) << '\t' << (spec ? spec->description : std::string()) << '\n';
    }
  }
}

int run_explain(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto h = cfg.hyper;
    h.jobs = cfg.jobs;
    Experiment exp = run_experiment(load_dataset(cfg), cfg.seed, h);
    Engine engine(resolve_data_dir(cfg.data_dir));
    ml::ShapleyOptions opt;
    opt.permutations = cfg.permutations;
    opt.seed = cfg.seed;
    opt.jobs = cfg.jobs;
    auto report = ml::shapley_attribution(exp.model, exp.dataset, exp.split.train, exp.split.test, opt);
    if (cfg.report.empty()) {
      write_attribution(out, report, engine.registry());
    } else {
      auto f = open_out(cfg.report);
      write_attribution(f, report, engine.registry());
      close_checked(f, cfg.report);
      for (const auto& ca : report.classes) {
        out << "class " << ca.class_name << " (" << ca.rows_explained << " rows explained)\n";
        for (const auto& e : ca.top_positive(cfg.top_k)) out << "  + " << e.metric_id << '\t' << format_double(e.shapley_mean) << '\n';
        for (const auto& e : ca.top_negative(cfg.top_k)) out << "  - " << e.metric_id << '\t' << format_double(e.shapley_mean) << '\n';
      }
    }
    for (const auto& ca : report.classes) {
      if (ca.efficiency_violations > 0) {
        err << "explain: warning: " << ca.efficiency_violations << " row(s) of class " << ca.class_name
            << " missed the efficiency check\n";
      }
    }
    return 0;
  } catch (const std::exception& e) {
    err << "explain: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace stylo
