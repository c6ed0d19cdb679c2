#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <map>

#include "stylo/feature_matrix.hpp"
#include "stylo/ml/evaluation.hpp"
#include "stylo/pipeline.hpp"

namespace py = pybind11;
using namespace stylo;

namespace {

py::dict matrix_dict(const FeatureMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    rows.append(py::cast(std::vector<double>(row.begin(), row.end())));
  }
  py::dict out;
  out["doc_ids"] = m.doc_ids;
  out["metric_ids"] = m.metric_ids;
  out["values"] = rows;
  return out;
}

FeatureMatrix extract(const Engine& engine, const std::vector<Document>& docs, const std::vector<std::string>& groups,
                      unsigned jobs) {
  MetricRegistry reg = engine.select(groups);
  py::gil_scoped_release release;
  return compute_matrix(docs, reg, engine.rules(), jobs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ukrainian stylometric features from CoNLL-U";

  m.def("default_data_dir", [] { return default_data_dir(); });

  py::class_<Engine>(m, "Engine")
      .def(py::init<const std::filesystem::path&>(), py::arg("data_dir"))
      .def_property_readonly("data_dir", &Engine::data_dir)
      .def(
          "metric_ids", [](const Engine& e, const std::vector<std::string>& groups) { return e.select(groups).ids(); },
          py::arg("groups") = std::vector<std::string>{})
      .def("catalog",
           [](const Engine& e) {
             py::list out;
             for (const auto& spec : e.registry().metrics()) {
               py::dict row;
               row["id"] = spec.id;
               row["group"] = std::string(to_string(spec.group));
               row["description"] = spec.description;
               row["scope"] = std::string(to_string(spec.scope));
               out.append(row);
             }
             return out;
           })
      .def(
          "extract_text",
          [](const Engine& e, const std::string& conllu, const std::string& doc_id, const std::vector<std::string>& groups,
             unsigned jobs) { return matrix_dict(extract(e, parse_conllu(conllu, doc_id), groups, jobs)); },
          py::arg("conllu"), py::arg("doc_id") = "doc", py::arg("groups") = std::vector<std::string>{}, py::arg("jobs") = 1)
      .def(
          "extract_files",
          [](const Engine& e, const std::vector<std::filesystem::path>& paths, const std::vector<std::string>& groups,
             unsigned jobs) {
            std::vector<std::string> errors;
            auto docs = load_corpus(paths, errors);
            if (!errors.empty()) throw std::runtime_error(errors.front());
            return matrix_dict(extract(e, docs, groups, jobs));
          },
          py::arg("paths"), py::arg("groups") = std::vector<std::string>{}, py::arg("jobs") = 1)
      .def(
          "trace",
          [](const Engine& e, const std::string& conllu, const std::string& metric_id, const std::string& doc_id) {
            py::list out;
            for (const auto& doc : parse_conllu(conllu, doc_id)) {
              MatchTrace t = explain_matches(analyze(doc, e.rules()), e.registry(), metric_id);
              for (const auto& tok : t.matched) out.append(py::make_tuple(t.doc_id, tok.sent_id, tok.index, tok.form));
            }
            return out;
          },
          py::arg("conllu"), py::arg("metric_id"), py::arg("doc_id") = "doc");

  m.def(
      "macro_f1",
      [](const std::vector<int>& pred, const std::vector<int>& gold, std::size_t n_classes) {
        return n_classes == 0 ? ml::macro_f1(pred, gold) : ml::macro_f1(pred, gold, n_classes);
      },
      py::arg("predictions"), py::arg("gold"), py::arg("n_classes") = 0);

  m.def(
      "stratified_split",
      [](const std::vector<int>& labels, std::size_t n_classes, std::uint64_t seed) {
        ml::SplitSpec spec;
        spec.seed = seed;
        ml::Split s = ml::stratified_split(labels, n_classes, spec);
        return py::make_tuple(s.train, s.validation, s.test);
      },
      py::arg("labels"), py::arg("n_classes"), py::arg("seed") = 42);

  m.def(
      "classify",
      [](const std::vector<std::string>& doc_ids, const std::vector<std::vector<double>>& values,
         const std::map<std::string, std::string>& labels, std::uint64_t seed, unsigned jobs) {
        FeatureMatrix fm;
        fm.doc_ids = doc_ids;
        std::size_t cols = values.empty() ? 0 : values.front().size();
        for (std::size_t j = 0; j < cols; ++j) fm.metric_ids.push_back("f" + std::to_string(j));
        for (const auto& row : values) {
          if (row.size() != cols) throw std::invalid_argument("ragged feature rows");
          fm.values.insert(fm.values.end(), row.begin(), row.end());
        }
        if (doc_ids.size() != values.size()) throw std::invalid_argument("doc_ids and values differ in length");
        ml::Hyperparams hp;
        hp.jobs = jobs;
        ml::LabeledDataset ds = ml::make_dataset(std::move(fm), labels);
        Experiment exp = [&] {
          py::gil_scoped_release release;
          return run_experiment(std::move(ds), seed, hp);
        }();
        py::dict predictions;
        for (std::size_t i = 0; i < exp.split.test.size(); ++i) {
          predictions[py::str(exp.dataset.matrix.doc_ids[exp.split.test[i]])] =
              exp.dataset.class_names[exp.test_predictions[i]];
        }
        py::dict out;
        out["test_macro_f1"] = exp.test_macro_f1;
        out["test_accuracy"] = exp.test_accuracy;
        out["validation_macro_f1"] = exp.validation_macro_f1;
        out["predictions"] = predictions;
        return out;
      },
      py::arg("doc_ids"), py::arg("values"), py::arg("labels"), py::arg("seed") = 42, py::arg("jobs") = 1);

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<LexiconError>(m, "LexiconError", PyExc_OSError);
}
