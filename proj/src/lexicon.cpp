#include "stylo/lexicon.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "stylo/text.hpp"

#ifndef STYLO_DEFAULT_DATA_DIR
#define STYLO_DEFAULT_DATA_DIR "data"
#endif

namespace stylo {

namespace {

void merge(Features& into, const Features& from) {
  for (const auto& [k, v] : from) into.insert_or_assign(k, v);
}

void add_affix(std::vector<std::pair<std::string, Features>>& list, std::string key, const Features& feats) {
  auto it = std::find_if(list.begin(), list.end(), [&](const auto& e) { return e.first == key; });
  if (it != list.end()) {
    merge(it->second, feats);
    return;
  }
  list.emplace_back(std::move(key), feats);
}

void sort_longest_first(std::vector<std::pair<std::string, Features>>& list) {
  std::stable_sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
}

}  // namespace

Lexicon Lexicon::parse(std::string_view text, std::string_view source) {
  Lexicon lex;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw LexiconError(std::string(source) + ":" + std::to_string(line_no) + ": expected lemma<TAB>key=value");
    }
    std::string key = normalize_key(trim(line.substr(0, tab)));
    Features feats;
    try {
      feats = parse_features(trim(line.substr(tab + 1)));
    } catch (const std::invalid_argument& e) {
      throw LexiconError(std::string(source) + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (key.size() > 1 && key.front() == '-') {
      add_affix(lex.suffixes_, key.substr(1), feats);
    } else if (key.size() > 1 && key.back() == '-') {
      add_affix(lex.prefixes_, key.substr(0, key.size() - 1), feats);
    } else {
      merge(lex.words_[key], feats);
    }
  }
  sort_longest_first(lex.suffixes_);
  sort_longest_first(lex.prefixes_);
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw LexiconError("missing lexicon file: " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), file.string());
}

const Features* Lexicon::find(std::string_view word) const {
  auto it = words_.find(normalize_key(word));
  return it == words_.end() ? nullptr : &it->second;
}

std::optional<std::string_view> Lexicon::lookup(std::string_view word, std::string_view key) const {
  const Features* f = find(word);
  if (!f) return std::nullopt;
  return feature(*f, key);
}

const Features* Lexicon::match_suffix(std::string_view word) const {
  std::string w = normalize_key(word);
  for (const auto& [suffix, feats] : suffixes_) {
    if (w.size() > suffix.size() && ends_with(w, suffix)) return &feats;
  }
  return nullptr;
}

const Features* Lexicon::match_prefix(std::string_view word, std::size_t min_rest) const {
  std::string w = normalize_key(word);
  for (const auto& [prefix, feats] : prefixes_) {
    if (starts_with(w, prefix) && utf8_length(std::string_view(w).substr(prefix.size())) >= std::max<std::size_t>(min_rest, 1)) {
      return &feats;
    }
  }
  return nullptr;
}

std::vector<std::string> LanguageData::file_names() {
  return {"corrections.tsv", "aspect.tsv",        "declension.tsv",   "conjugation.tsv",
          "transitivity.tsv", "diminutives.tsv", "speech_verbs.tsv", "amplifiers.tsv"};
}

std::shared_ptr<const LanguageData> LanguageData::load(const std::filesystem::path& data_dir) {
  auto data = std::make_shared<LanguageData>();
  const auto dir = data_dir / "lexicons";
  data->corrections = Lexicon::load(dir / "corrections.tsv");
  data->aspect = Lexicon::load(dir / "aspect.tsv");
  data->declension = Lexicon::load(dir / "declension.tsv");
  data->conjugation = Lexicon::load(dir / "conjugation.tsv");
  data->transitivity = Lexicon::load(dir / "transitivity.tsv");
  data->diminutives = Lexicon::load(dir / "diminutives.tsv");
  data->speech_verbs = Lexicon::load(dir / "speech_verbs.tsv");
  data->amplifiers = Lexicon::load(dir / "amplifiers.tsv");
  return data;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("STYLOMETRIX_DATA_DIR"); env && *env) return env;
  return STYLO_DEFAULT_DATA_DIR;
}

}  // namespace stylo
