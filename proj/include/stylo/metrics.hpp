#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stylo/conllu.hpp"
#include "stylo/morphology.hpp"

namespace stylo {

enum class MetricGroup : std::uint8_t { Lexical, Grammar, Syntax, Pos };
enum class MetricScope : std::uint8_t { TokenPredicate, SentenceSpan, Ratio };

std::string_view to_string(MetricGroup g);
std::string_view to_string(MetricScope s);
std::optional<MetricGroup> parse_group(std::string_view name);

/// Published per-group sizes; the catalog reports them next to the actual sizes.
std::size_t declared_group_size(MetricGroup g);

/// A sentence after tag correction, with derived morphology and child lists.
struct AnalyzedSentence {
  Sentence sentence;
  std::vector<DerivedMorph> morph;
  std::vector<std::vector<std::size_t>> children;

  const Token& token(std::size_t pos) const { return sentence.tokens[pos]; }
  std::size_t size() const { return sentence.tokens.size(); }
};

struct AnalyzedDocument {
  std::string doc_id;
  std::vector<AnalyzedSentence> sentences;
  std::size_t token_count = 0;
};

/// Validates the document (throws ValidationError naming the doc) and derives morphology.
AnalyzedDocument analyze(const Document& doc, const MorphologyRules& rules);

class TokenView {
 public:
  TokenView(const AnalyzedSentence& sentence, std::size_t pos) : sentence_(&sentence), pos_(pos) {}

  const AnalyzedSentence& sentence() const { return *sentence_; }
  std::size_t pos() const { return pos_; }
  const Token& token() const { return sentence_->token(pos_); }
  const DerivedMorph& morph() const { return sentence_->morph[pos_]; }
  Upos upos() const { return token().upos; }
  bool has(std::string_view key, std::string_view value) const { return has_feature(token().feats, key, value); }
  bool has_key(std::string_view key) const { return token().feats.contains(key); }
  const std::vector<std::size_t>& children() const { return sentence_->children[pos_]; }
  const Token* head() const { return token().head > 0 ? &sentence_->token(token().head - 1) : nullptr; }
  std::string lemma_key() const;

 private:
  const AnalyzedSentence* sentence_;
  std::size_t pos_;
};

using TokenPredicate = std::function<bool(const TokenView&)>;
/// Appends the matched positions of one sentence, in increasing order.
using SpanRule = std::function<void(const AnalyzedSentence&, std::vector<std::size_t>&)>;
/// Type identity of a token for distinct-count metrics; nullopt excludes the token.
using TypeKey = std::function<std::optional<std::string>(const TokenView&)>;
using MetricRule = std::variant<TokenPredicate, SpanRule, TypeKey>;

struct MetricSpec {
  std::string id;
  MetricGroup group;
  std::string description;
  MetricScope scope;
  MetricRule rule;
};

class MetricRegistry {
 public:
  MetricRegistry() = default;
  explicit MetricRegistry(std::vector<MetricSpec> metrics);

  const std::vector<MetricSpec>& metrics() const { return metrics_; }
  std::size_t size() const { return metrics_.size(); }
  const MetricSpec& operator[](std::size_t i) const { return metrics_[i]; }

  const MetricSpec* find(std::string_view id) const;
  std::optional<std::size_t> index_of(std::string_view id) const;
  std::size_t group_size(MetricGroup g) const;
  std::vector<std::string> ids() const;

  /// Sub-registry keeping registry order.
  MetricRegistry select(std::span<const MetricGroup> groups) const;

 private:
  std::vector<MetricSpec> metrics_;
};

MetricRegistry builtin_registry(std::shared_ptr<const LanguageData> data);

struct MatchedToken {
  std::string sent_id;
  int index = 0;
  std::string form;

  bool operator==(const MatchedToken&) const = default;
};

struct MatchTrace {
  std::string metric_id;
  std::string doc_id;
  std::vector<MatchedToken> matched;
};

struct MetricResult {
  double value = 0.0;
  MatchTrace trace;
};

MetricResult evaluate_metric(const AnalyzedDocument& doc, const MetricSpec& spec);
std::vector<double> evaluate_all(const AnalyzedDocument& doc, const MetricRegistry& registry);

/// Throws std::out_of_range for an unknown id.
MatchTrace explain_matches(const AnalyzedDocument& doc, const MetricRegistry& registry, std::string_view metric_id);

}  // namespace stylo
