#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fos {

/// One word of an input string after folding. `begin`/`end` are byte
/// offsets into the original UTF-8 string, so the original surface form
/// can be recovered.
struct Token {
  std::string text;  // folded: lowercase ASCII letters/digits only
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Canonical form used as the deduplication key and for keyword matching:
/// lowercased, accents folded to base letters, punctuation replaced by
/// spaces, whitespace collapsed, trimmed.
std::string normalize_title(std::string_view s);

/// Splits a UTF-8 string into folded word tokens. Non-alphanumeric code
/// points act as separators; accented Latin letters fold to their ASCII
/// base form.
std::vector<Token> tokenize(std::string_view s);

/// Character-level Levenshtein distance over folded (ASCII) tokens.
/// Returns max_interesting + 1 as soon as the distance provably exceeds
/// max_interesting, so callers can pass their acceptance cap.
int levenshtein(std::string_view a, std::string_view b,
                int max_interesting = 1 << 20);

}  // namespace fos
