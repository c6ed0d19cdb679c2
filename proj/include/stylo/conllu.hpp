#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stylo {

/// The 17 Universal Dependencies part-of-speech tags.
enum class Upos : std::uint8_t {
  Adj,
  Adp,
  Adv,
  Aux,
  Cconj,
  Det,
  Intj,
  Noun,
  Num,
  Part,
  Pron,
  Propn,
  Punct,
  Sconj,
  Sym,
  Verb,
  X,
};

inline constexpr std::size_t kUposCount = 17;

std::string_view to_string(Upos upos);
std::optional<Upos> parse_upos(std::string_view tag);

using Features = std::map<std::string, std::string, std::less<>>;

/// Parses a FEATS column. "_" yields an empty map.
Features parse_features(std::string_view column);
std::string format_features(const Features& feats);

/// Looks up a feature, treating comma-separated multi-values ("Int,Rel") as sets.
bool has_feature(const Features& feats, std::string_view key, std::string_view value);
std::optional<std::string_view> feature(const Features& feats, std::string_view key);

/// One syntactic word. `head` is the 1-based index of the governor, 0 for the root.
struct Token {
  int index = 0;
  std::string form;
  std::string lemma;
  Upos upos = Upos::X;
  std::string xpos = "_";
  Features feats;
  int head = 0;
  std::string deprel;
  std::string deps = "_";
  std::string misc = "_";

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::string sent_id;
  std::string text;
  std::vector<std::string> comments;  // unrecognized comment lines, without the leading '#'
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  bool operator==(const Sentence&) const = default;
};

struct Document {
  std::string doc_id;
  std::vector<Sentence> sentences;

  bool operator==(const Document&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

struct Diagnostic {
  enum class Kind { NonContiguousIndex, HeadOutOfRange, SelfLoop, Cycle, NoRoot, MultipleRoots, Empty };
  Kind kind;
  std::string message;
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string doc_id, std::string sent_id, std::vector<Diagnostic> diagnostics);

  const std::string& doc_id() const { return doc_id_; }
  const std::string& sent_id() const { return sent_id_; }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::string doc_id_;
  std::string sent_id_;
  std::vector<Diagnostic> diagnostics_;
};

/// Empty iff the sentence has contiguous indices from 1, exactly one root and an acyclic head graph.
std::vector<Diagnostic> validate(const Sentence& sentence);

/// Reads a CoNLL-U stream. Multiword-token ranges and empty nodes are skipped.
/// Sentences before any `# newdoc id` belong to a document named `default_doc_id`.
/// Throws ParseError on malformed lines and ValidationError on invalid trees or empty documents.
std::vector<Document> parse_conllu(std::istream& in, std::string_view default_doc_id = "doc",
                                   std::string_view source = "<stream>");
std::vector<Document> parse_conllu(std::string_view text, std::string_view default_doc_id = "doc");

/// Document id defaults to the file name without its extension.
std::vector<Document> read_conllu_file(const std::filesystem::path& path);

void write_conllu(std::ostream& out, const Document& doc);
std::string to_conllu(const Document& doc);

/// N: every syntactic word, punctuation included.
std::size_t token_count(const Document& doc);

}  // namespace stylo
