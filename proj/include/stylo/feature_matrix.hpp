#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stylo/conllu.hpp"
#include "stylo/metrics.hpp"

namespace stylo {

/// Documents x metrics, row-major.
struct FeatureMatrix {
  std::vector<std::string> doc_ids;
  std::vector<std::string> metric_ids;
  std::vector<double> values;

  std::size_t rows() const { return doc_ids.size(); }
  std::size_t cols() const { return metric_ids.size(); }
  double at(std::size_t r, std::size_t c) const { return values[r * cols() + c]; }
  double& at(std::size_t r, std::size_t c) { return values[r * cols() + c]; }
  std::span<const double> row(std::size_t r) const { return {values.data() + r * cols(), cols()}; }

  bool operator==(const FeatureMatrix&) const = default;
};

/// One row per document in input order. Output does not depend on `jobs`.
FeatureMatrix compute_matrix(std::span<const Document> corpus, const MetricRegistry& registry, const MorphologyRules& rules,
                             unsigned jobs = 1);

/// `doc_id,<metric ids>` header, comma separated, 17 significant digits, '.' decimal point.
void write_csv(std::ostream& out, const FeatureMatrix& m);
std::string to_csv(const FeatureMatrix& m);
FeatureMatrix read_csv(std::istream& in);
FeatureMatrix read_csv(std::string_view text);

/// Percent-encodes everything outside [A-Za-z0-9_.-].
std::string encode_doc_id(std::string_view id);
std::string decode_doc_id(std::string_view encoded);

std::string format_double(double v);

}  // namespace stylo
