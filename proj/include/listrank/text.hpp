#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace listrank {

// Strict UTF-8 well-formedness check (rejects overlong forms, surrogates,
// codepoints past U+10FFFF, truncated sequences).
bool valid_utf8(std::string_view text);

// Decodes the codepoint starting at byte `pos`. Returns the codepoint and
// advances `pos` past it. Behaviour is only defined on valid UTF-8.
char32_t decode_codepoint(std::string_view text, std::size_t& pos);

// Case folding for ASCII, Latin-1, Latin Extended-A, Greek and Cyrillic.
// Other codepoints are returned unchanged.
char32_t simple_lowercase(char32_t cp);

// Whether a codepoint belongs inside a lexical token: ASCII alphanumerics,
// plus non-ASCII codepoints that are not whitespace or common punctuation.
bool is_token_codepoint(char32_t cp);

// Appends a codepoint to `out` as UTF-8.
void append_utf8(std::string& out, char32_t cp);

// Replaces newline sequences (\r\n, \n, \r) with single spaces.
std::string collapse_newlines(std::string_view text);

std::string_view trim(std::string_view text);

// Splits on runs of ASCII whitespace; no empty fields.
std::vector<std::string_view> split_whitespace(std::string_view text);

// FNV-1a, used wherever a platform-stable hash is needed.
std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 14695981039346656037ull);

} // namespace listrank
