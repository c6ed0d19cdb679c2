#include "stylo/metrics.hpp"

#include <set>
#include <stdexcept>
#include <unordered_set>

#include "stylo/text.hpp"

namespace stylo {

std::string_view to_string(MetricGroup g) {
  switch (g) {
    case MetricGroup::Lexical: return "lexical";
    case MetricGroup::Grammar: return "grammar";
    case MetricGroup::Syntax: return "syntax";
    case MetricGroup::Pos: return "pos";
  }
  return "?";
}

std::string_view to_string(MetricScope s) {
  switch (s) {
    case MetricScope::TokenPredicate: return "token_predicate";
    case MetricScope::SentenceSpan: return "sentence_span";
    case MetricScope::Ratio: return "ratio";
  }
  return "?";
}

std::optional<MetricGroup> parse_group(std::string_view name) {
  for (auto g : {MetricGroup::Lexical, MetricGroup::Grammar, MetricGroup::Syntax, MetricGroup::Pos}) {
    if (to_string(g) == name) return g;
  }
  return std::nullopt;
}

std::size_t declared_group_size(MetricGroup g) {
  switch (g) {
    case MetricGroup::Lexical: return 56;
    case MetricGroup::Grammar: return 23;
    case MetricGroup::Syntax: return 14;
    case MetricGroup::Pos: return 12;
  }
  return 0;
}

std::string TokenView::lemma_key() const {
  const Token& t = token();
  return normalize_key(t.lemma.empty() || t.lemma == "_" ? t.form : t.lemma);
}

AnalyzedDocument analyze(const Document& doc, const MorphologyRules& rules) {
  AnalyzedDocument out;
  out.doc_id = doc.doc_id;
  for (const auto& s : doc.sentences) {
    if (auto diagnostics = validate(s); !diagnostics.empty()) throw ValidationError(doc.doc_id, s.sent_id, std::move(diagnostics));
  }
  out.token_count = token_count(doc);
  if (out.token_count == 0) {
    throw ValidationError(doc.doc_id, "", {Diagnostic{Diagnostic::Kind::Empty, "document has no tokens"}});
  }
  out.sentences.reserve(doc.sentences.size());
  for (const auto& s : doc.sentences) {
    AnalyzedSentence as;
    as.morph = derive_sentence(rules, s);
    as.sentence = corrected_sentence(rules, s);
    as.children.resize(s.tokens.size());
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (int h = s.tokens[i].head; h > 0) as.children[h - 1].push_back(i);
    }
    out.sentences.push_back(std::move(as));
  }
  return out;
}

MetricRegistry::MetricRegistry(std::vector<MetricSpec> metrics) : metrics_(std::move(metrics)) {
  std::unordered_set<std::string> seen;
  for (const auto& m : metrics_) {
    if (!seen.insert(m.id).second) throw std::invalid_argument("duplicate metric id " + m.id);
    if (m.description.empty()) throw std::invalid_argument("metric " + m.id + " has no description");
    const bool rule_matches = (m.scope == MetricScope::TokenPredicate && std::holds_alternative<TokenPredicate>(m.rule)) ||
                              (m.scope == MetricScope::SentenceSpan && std::holds_alternative<SpanRule>(m.rule)) ||
                              (m.scope == MetricScope::Ratio && std::holds_alternative<TypeKey>(m.rule));
    if (!rule_matches) throw std::invalid_argument("metric " + m.id + " has a rule that does not fit its scope");
  }
}

const MetricSpec* MetricRegistry::find(std::string_view id) const {
  for (const auto& m : metrics_) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

std::optional<std::size_t> MetricRegistry::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < metrics_.size(); ++i) {
    if (metrics_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t MetricRegistry::group_size(MetricGroup g) const {
  std::size_t n = 0;
  for (const auto& m : metrics_) n += m.group == g;
  return n;
}

std::vector<std::string> MetricRegistry::ids() const {
  std::vector<std::string> out;
  out.reserve(metrics_.size());
  for (const auto& m : metrics_) out.push_back(m.id);
  return out;
}

MetricRegistry MetricRegistry::select(std::span<const MetricGroup> groups) const {
  std::vector<MetricSpec> kept;
  for (const auto& m : metrics_) {
    for (auto g : groups) {
      if (m.group == g) {
        kept.push_back(m);
        break;
      }
    }
  }
  return MetricRegistry(std::move(kept));
}

namespace {

struct Collector {
  const AnalyzedDocument& doc;
  const MetricSpec& spec;
  MatchTrace& trace;

  void add(const AnalyzedSentence& s, std::size_t pos) const {
    const Token& t = s.token(pos);
    trace.matched.push_back({s.sentence.sent_id, t.index, t.form});
  }

  std::size_t operator()(const TokenPredicate& pred) const {
    for (const auto& s : doc.sentences) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (pred(TokenView(s, i))) add(s, i);
      }
    }
    return trace.matched.size();
  }

  std::size_t operator()(const SpanRule& rule) const {
    std::vector<std::size_t> positions;
    for (const auto& s : doc.sentences) {
      positions.clear();
      rule(s, positions);
      for (auto p : positions) add(s, p);
    }
    return trace.matched.size();
  }

  std::size_t operator()(const TypeKey& key) const {
    std::set<std::string, std::less<>> seen;
    for (const auto& s : doc.sentences) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto k = key(TokenView(s, i));
        if (k && seen.insert(std::move(*k)).second) add(s, i);
      }
    }
    return seen.size();
  }
};

}  // namespace

MetricResult evaluate_metric(const AnalyzedDocument& doc, const MetricSpec& spec) {
  MetricResult result;
  result.trace.metric_id = spec.id;
  result.trace.doc_id = doc.doc_id;
  std::size_t numerator = std::visit(Collector{doc, spec, result.trace}, spec.rule);
  result.value = doc.token_count == 0 ? 0.0 : static_cast<double>(numerator) / static_cast<double>(doc.token_count);
  return result;
}

std::vector<double> evaluate_all(const AnalyzedDocument& doc, const MetricRegistry& registry) {
  std::vector<double> out;
  out.reserve(registry.size());
  for (const auto& m : registry.metrics()) out.push_back(evaluate_metric(doc, m).value);
  return out;
}

MatchTrace explain_matches(const AnalyzedDocument& doc, const MetricRegistry& registry, std::string_view metric_id) {
  const MetricSpec* spec = registry.find(metric_id);
  if (!spec) throw std::out_of_range("unknown metric id " + std::string(metric_id));
  return evaluate_metric(doc, *spec).trace;
}

}  // namespace stylo
