#ifndef BOOKSUIT_TEXT_HPP
#define BOOKSUIT_TEXT_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace booksuit {

/// Collapse every maximal run of Unicode whitespace (ASCII blanks, NBSP,
/// the general-punctuation spaces, line/paragraph separators) to a single
/// ASCII space and trim the ends. All other bytes pass through unchanged.
/// Total and idempotent.
std::string normalize_whitespace(std::string_view text);

/// Decode one UTF-8 code point starting at byte offset `i`. Advances `i`
/// past the sequence. Malformed bytes decode as U+FFFD and advance by one.
char32_t decode_utf8(std::string_view s, std::size_t& i);

/// Append a code point to `out` as UTF-8.
void append_utf8(std::string& out, char32_t cp);

bool is_unicode_space(char32_t cp);

/// Letter test covering ASCII and the Latin-1/Latin-Extended ranges used by
/// English-language book texts (accented names and loanwords).
bool is_word_letter(char32_t cp);

bool is_ascii_upper(char ch);
bool is_ascii_digit(char ch);

/// Lowercase ASCII and Latin-1 letters; other code points pass through.
char32_t to_lower_cp(char32_t cp);

/// Lowercase a UTF-8 string (ASCII + Latin-1 ranges).
std::string to_lower(std::string_view s);

/// True when the token has at least one ASCII letter and every ASCII letter
/// is uppercase.
bool is_all_caps(std::string_view token);

} // namespace booksuit

#endif
