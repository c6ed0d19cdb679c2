#include "stylo/conllu.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "stylo/text.hpp"

namespace stylo {

namespace {

constexpr std::array<std::string_view, kUposCount> kUposNames = {
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
};

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Splits "key = value" comment bodies; returns false if the comment is not of that form.
bool split_comment(std::string_view body, std::string_view& key, std::string_view& value) {
  auto eq = body.find('=');
  if (eq == std::string_view::npos) {
    key = trim(body);
    value = {};
    return false;
  }
  key = trim(body.substr(0, eq));
  value = trim(body.substr(eq + 1));
  return true;
}

std::string describe(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) {
    if (!out.empty()) out += "; ";
    out += d.message;
  }
  return out;
}

class Reader {
 public:
  Reader(std::string_view default_doc_id, std::string_view source) : default_doc_id_(default_doc_id), source_(source) {}

  void line(std::string_view raw) {
    ++line_no_;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (trim(raw).empty()) {
      finish_sentence();
      return;
    }
    if (raw.front() == '#') {
      comment(raw.substr(1));
      return;
    }
    token_line(raw);
  }

  std::vector<Document> finish() {
    finish_sentence();
    finish_document();
    return std::move(docs_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(source_, line_no_, message); }

  void comment(std::string_view body) {
    if (!pending_.tokens.empty()) fail("comment line inside a sentence");
    std::string_view key;
    std::string_view value;
    bool has_value = split_comment(body, key, value);
    if (key == "newdoc id" || key == "newdoc") {
      finish_document();
      std::string id = has_value && !value.empty() ? std::string(value) : default_doc_id_ + "-" + std::to_string(docs_.size() + 1);
      start_document(std::move(id));
    } else if (key == "sent_id" && has_value) {
      pending_.sent_id = std::string(value);
    } else if (key == "text" && has_value) {
      pending_.text = std::string(value);
    } else {
      pending_.comments.emplace_back(body);
    }
  }

  void token_line(std::string_view raw) {
    auto cols = split(raw, '\t');
    if (cols.size() != 10) fail("expected 10 tab-separated columns, found " + std::to_string(cols.size()));
    const std::string& id = cols[0];
    if (id.find('-') != std::string::npos || id.find('.') != std::string::npos) return;
    auto index = parse_int(id);
    if (!index || *index < 1) fail("invalid token id '" + id + "'");
    auto upos = parse_upos(cols[3]);
    if (!upos) fail("unknown UPOS tag '" + cols[3] + "'");
    auto head = parse_int(cols[6]);
    if (!head || *head < 0) fail("invalid head '" + cols[6] + "'");

    Token tok;
    tok.index = *index;
    tok.form = cols[1];
    tok.lemma = cols[2];
    tok.upos = *upos;
    tok.xpos = cols[4];
    try {
      tok.feats = parse_features(cols[5]);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    tok.head = *head;
    tok.deprel = cols[7];
    tok.deps = cols[8];
    tok.misc = cols[9];
    pending_.tokens.push_back(std::move(tok));
  }

  void start_document(std::string id) {
    if (!seen_ids_.insert(id).second) fail("duplicate document id '" + id + "'");
    current_ = Document{std::move(id), {}};
    open_ = true;
  }

  void finish_sentence() {
    if (pending_.tokens.empty()) {
      // Comments with no tokens (e.g. a lone newdoc header) carry over to the next sentence.
      return;
    }
    if (!open_) start_document(default_doc_id_);
    if (pending_.sent_id.empty()) pending_.sent_id = std::to_string(current_.sentences.size() + 1);
    auto diagnostics = validate(pending_);
    if (!diagnostics.empty()) throw ValidationError(current_.doc_id, pending_.sent_id, std::move(diagnostics));
    current_.sentences.push_back(std::move(pending_));
    pending_ = Sentence{};
  }

  void finish_document() {
    if (!open_) return;
    if (current_.sentences.empty()) {
      throw ValidationError(current_.doc_id, "", {Diagnostic{Diagnostic::Kind::Empty, "document has no tokens"}});
    }
    docs_.push_back(std::move(current_));
    current_ = Document{};
    open_ = false;
  }

  std::string default_doc_id_;
  std::string source_;
  std::size_t line_no_ = 0;
  std::vector<Document> docs_;
  std::set<std::string> seen_ids_;
  Document current_;
  bool open_ = false;
  Sentence pending_;
};

}  // namespace

std::string_view to_string(Upos upos) { return kUposNames[static_cast<std::size_t>(upos)]; }

std::optional<Upos> parse_upos(std::string_view tag) {
  for (std::size_t i = 0; i < kUposNames.size(); ++i) {
    if (kUposNames[i] == tag) return static_cast<Upos>(i);
  }
  return std::nullopt;
}

Features parse_features(std::string_view column) {
  Features feats;
  if (column == "_" || column.empty()) return feats;
  for (const auto& item : split(column, '|')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw std::invalid_argument("malformed feature '" + item + "'");
    }
    feats.insert_or_assign(item.substr(0, eq), item.substr(eq + 1));
  }
  return feats;
}

std::string format_features(const Features& feats) {
  if (feats.empty()) return "_";
  std::string out;
  for (const auto& [key, value] : feats) {
    if (!out.empty()) out += '|';
    out += key;
    out += '=';
    out += value;
  }
  return out;
}

std::optional<std::string_view> feature(const Features& feats, std::string_view key) {
  auto it = feats.find(key);
  if (it == feats.end()) return std::nullopt;
  return std::string_view(it->second);
}

bool has_feature(const Features& feats, std::string_view key, std::string_view value) {
  auto v = feature(feats, key);
  if (!v) return false;
  std::string_view rest = *v;
  while (true) {
    auto comma = rest.find(',');
    if (rest.substr(0, comma) == value) return true;
    if (comma == std::string_view::npos) return false;
    rest.remove_prefix(comma + 1);
  }
}

ParseError::ParseError(std::string source, std::size_t line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), source_(std::move(source)), line_(line) {}

ValidationError::ValidationError(std::string doc_id, std::string sent_id, std::vector<Diagnostic> diagnostics)
    : std::runtime_error("document '" + doc_id + "'" + (sent_id.empty() ? std::string() : ", sentence '" + sent_id + "'") +
                         ": " + describe(diagnostics)),
      doc_id_(std::move(doc_id)),
      sent_id_(std::move(sent_id)),
      diagnostics_(std::move(diagnostics)) {}

std::vector<Diagnostic> validate(const Sentence& sentence) {
  using Kind = Diagnostic::Kind;
  std::vector<Diagnostic> out;
  const auto& toks = sentence.tokens;
  const int n = static_cast<int>(toks.size());
  if (n == 0) {
    out.push_back({Kind::Empty, "sentence has no tokens"});
    return out;
  }
  for (int i = 0; i < n; ++i) {
    if (toks[i].index != i + 1) {
      out.push_back({Kind::NonContiguousIndex, "token ids are not contiguous from 1 at position " + std::to_string(i + 1)});
      return out;
    }
  }
  bool heads_ok = true;
  int roots = 0;
  for (const auto& t : toks) {
    if (t.head < 0 || t.head > n) {
      out.push_back({Kind::HeadOutOfRange, "token " + std::to_string(t.index) + " has head " + std::to_string(t.head) +
                                                " outside [0, " + std::to_string(n) + "]"});
      heads_ok = false;
    } else if (t.head == t.index) {
      out.push_back({Kind::SelfLoop, "token " + std::to_string(t.index) + " is its own head"});
      heads_ok = false;
    }
    if (t.head == 0) ++roots;
  }
  if (roots == 0) out.push_back({Kind::NoRoot, "no token attached to the root"});
  if (roots > 1) out.push_back({Kind::MultipleRoots, std::to_string(roots) + " tokens attached to the root"});
  if (!heads_ok) return out;

  // 0 = unvisited, 1 = on current path, 2 = known to reach the root
  std::vector<int> state(n + 1, 0);
  state[0] = 2;
  std::vector<bool> reported(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    std::vector<int> path;
    int cur = start;
    while (state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      cur = toks[cur - 1].head;
    }
    if (state[cur] == 1 && !reported[cur]) {
      std::string cycle;
      int c = cur;
      do {
        reported[c] = true;
        cycle += (cycle.empty() ? "" : "->") + std::to_string(c);
        c = toks[c - 1].head;
      } while (c != cur);
      cycle += "->" + std::to_string(cur);
      out.push_back({Kind::Cycle, "head cycle " + cycle});
    }
    for (int p : path) state[p] = 2;
  }
  return out;
}

std::vector<Document> parse_conllu(std::istream& in, std::string_view default_doc_id, std::string_view source) {
  Reader reader(default_doc_id, source);
  std::string raw;
  while (std::getline(in, raw)) reader.line(raw);
  return reader.finish();
}

std::vector<Document> parse_conllu(std::string_view text, std::string_view default_doc_id) {
  std::istringstream in{std::string(text)};
  return parse_conllu(in, default_doc_id);
}

std::vector<Document> read_conllu_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_conllu(in, path.stem().string(), path.string());
}

void write_conllu(std::ostream& out, const Document& doc) {
  out << "# newdoc id = " << doc.doc_id << '\n';
  for (const auto& s : doc.sentences) {
    out << "# sent_id = " << s.sent_id << '\n';
    if (!s.text.empty()) out << "# text = " << s.text << '\n';
    for (const auto& c : s.comments) out << '#' << c << '\n';
    for (const auto& t : s.tokens) {
      out << t.index << '\t' << t.form << '\t' << t.lemma << '\t' << to_string(t.upos) << '\t' << t.xpos << '\t'
          << format_features(t.feats) << '\t' << t.head << '\t' << t.deprel << '\t' << t.deps << '\t' << t.misc << '\n';
    }
    out << '\n';
  }
}

std::string to_conllu(const Document& doc) {
  std::ostringstream out;
  write_conllu(out, doc);
  return out.str();
}

std::size_t token_count(const Document& doc) {
  std::size_t n = 0;
  for (const auto& s : doc.sentences) n += s.tokens.size();
  return n;
}

}  // namespace stylo
