#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace clipsyntel::text {

// True for the Unicode code points treated as whitespace when splitting words.
bool is_space_codepoint(char32_t cp);

// Collapses whitespace runs to single ASCII spaces and trims both ends.
// UTF-8 aware; invalid bytes pass through as ordinary characters.
std::string normalize_whitespace(std::string_view s);

// Splits on Unicode whitespace runs; never returns empty tokens.
std::vector<std::string> split_words(std::string_view s);

std::size_t count_words(std::string_view s);

// ASCII-only lowercase; multi-byte sequences are left untouched.
std::string to_lower(std::string_view s);

// Tokenization used by the text metrics: lowercase, split on whitespace,
// strip leading/trailing punctuation from each token, keep digits.
// Tokens that are pure punctuation disappear.
std::vector<std::string> metric_tokens(std::string_view s);

// Fact normalization: lowercase, collapse whitespace, strip trailing
// punctuation characters.
std::string normalize_fact(std::string_view s);

// Stable 64-bit FNV-1a, used to seed deterministic mock vectors and to key
// the response cache file.
std::uint64_t fnv1a64(std::string_view s);

std::string strip_trailing_whitespace(std::string_view s);

}  // namespace clipsyntel::text
