#include "stylo/feature_matrix.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "stylo/parallel.hpp"
#include "stylo/text.hpp"

namespace stylo {

namespace {

bool plain(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::runtime_error("features csv line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::string encode_doc_id(std::string_view id) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (char ch : id) {
    if (plain(ch)) {
      out.push_back(ch);
    } else {
      auto b = static_cast<unsigned char>(ch);
      out.push_back('%');
      out.push_back(kHex[b >> 4]);
      out.push_back(kHex[b & 0xF]);
    }
  }
  return out;
}

std::string decode_doc_id(std::string_view encoded) {
  std::string out;
  for (std::size_t i = 0; i < encoded.size(); ++i) {
    if (encoded[i] == '%' && i + 2 < encoded.size()) {
      int hi = hex_value(encoded[i + 1]);
      int lo = hex_value(encoded[i + 2]);
      if (hi >= 0 && lo >= 0) {
        out.push_back(static_cast<char>(hi * 16 + lo));
        i += 2;
        continue;
      }
    }
    out.push_back(encoded[i]);
  }
  return out;
}

FeatureMatrix compute_matrix(std::span<const Document> corpus, const MetricRegistry& registry, const MorphologyRules& rules,
                             unsigned jobs) {
  FeatureMatrix m;
  m.metric_ids = registry.ids();
  m.doc_ids.reserve(corpus.size());
  for (const auto& d : corpus) m.doc_ids.push_back(d.doc_id);
  m.values.assign(corpus.size() * registry.size(), 0.0);
  parallel_for(corpus.size(), jobs, [&](std::size_t r) {
    AnalyzedDocument doc = analyze(corpus[r], rules);
    auto row = evaluate_all(doc, registry);
    std::copy(row.begin(), row.end(), m.values.begin() + static_cast<std::ptrdiff_t>(r * registry.size()));
  });
  return m;
}

void write_csv(std::ostream& out, const FeatureMatrix& m) {
  out << "doc_id";
  for (const auto& id : m.metric_ids) out << ',' << id;
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << encode_doc_id(m.doc_ids[r]);
    for (double v : m.row(r)) out << ',' << format_double(v);
    out << '\n';
  }
}

std::string to_csv(const FeatureMatrix& m) {
  std::ostringstream out;
  write_csv(out, m);
  return out.str();
}

FeatureMatrix read_csv(std::istream& in) {
  FeatureMatrix m;
  std::string line;
  std::size_t line_no = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line, ',');
    if (header) {
      if (cells.empty() || cells[0] != "doc_id") throw std::runtime_error("features csv: header must start with doc_id");
      m.metric_ids.assign(cells.begin() + 1, cells.end());
      header = false;
      continue;
    }
    if (cells.size() != m.metric_ids.size() + 1) {
      throw std::runtime_error("features csv line " + std::to_string(line_no) + ": expected " +
                               std::to_string(m.metric_ids.size() + 1) + " cells, found " + std::to_string(cells.size()));
    }
    m.doc_ids.push_back(decode_doc_id(cells[0]));
    for (std::size_t c = 1; c < cells.size(); ++c) {
      double v = parse_double(cells[c], line_no);
      if (!std::isfinite(v)) throw std::runtime_error("features csv line " + std::to_string(line_no) + ": non-finite value");
      m.values.push_back(v);
    }
  }
  if (header) throw std::runtime_error("features csv: empty input");
  return m;
}

FeatureMatrix read_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_csv(in);
}

}  // namespace stylo
