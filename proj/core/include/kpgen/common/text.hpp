#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kpgen {

// A whitespace-delimited token with its byte span in the source string.
struct TokenSpan {
  std::string_view text;
  size_t begin = 0;  // byte offset, half-open [begin, end)
  size_t end = 0;
};

// Split on ASCII whitespace runs. Views point into `s`.
std::vector<TokenSpan> tokenize_spans(std::string_view s);

// Convenience: tokens as owned strings.
std::vector<std::string> tokenize(std::string_view s);

std::string join(const std::vector<std::string>& tokens, std::string_view sep = " ");

std::string_view trim(std::string_view s);

// ASCII-only lowering; multibyte UTF-8 sequences pass through untouched.
std::string to_lower(std::string_view s);

bool is_ascii_space(char c);

size_t count_tokens(std::string_view s);

// True if `needle` occurs in `haystack` as a whole-token subsequence under
// ASCII case folding. Both sides are whitespace-tokenized.
bool contains_token_seq(std::string_view haystack, std::string_view needle);

// All whole-token occurrences of `needle` in `haystack`, reported as byte
// spans into `haystack` covering the matched tokens. Case-insensitive.
std::vector<std::pair<size_t, size_t>> find_token_seq(std::string_view haystack,
                                                      std::string_view needle);

}  // namespace kpgen
