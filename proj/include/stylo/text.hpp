#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stylo {

// UTF-8 helpers sized for Ukrainian text. Case folding covers ASCII, Latin-1
// and the Cyrillic blocks; everything else passes through unchanged.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);

std::string to_lower(std::string_view s);

// Lowercases and maps the typographic apostrophes (U+2019, U+02BC) to '\''.
std::string normalize_key(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

// Number of code points, not bytes.
std::size_t utf8_length(std::string_view s);

// True if every letter in s is uppercase and s has at least two letters.
bool is_abbreviation(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);
std::string_view trim(std::string_view s);

// Strips the reflexive postfix -ся / -сь from a verb lemma or form.
std::string strip_reflexive(std::string_view word);
bool is_reflexive(std::string_view word);

}  // namespace stylo
