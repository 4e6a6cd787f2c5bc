#include "kpgen/common/text.hpp"

#include <cctype>

namespace kpgen {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::vector<TokenSpan> tokenize_spans(std::string_view s) {
  std::vector<TokenSpan> out;
  size_t i = 0;
  const size_t n = s.size();
  while (i < n) {
    while (i < n && is_ascii_space(s[i])) ++i;
    if (i >= n) break;
    size_t start = i;
    while (i < n && !is_ascii_space(s[i])) ++i;
    out.push_back({s.substr(start, i - start), start, i});
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& t : tokenize_spans(s)) out.emplace_back(t.text);
  return out;
}

std::string join(const std::vector<std::string>& tokens, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += sep;
    out += tokens[i];
  }
  return out;
}

std::string_view trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && is_ascii_space(s[b])) ++b;
  while (e > b && is_ascii_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

size_t count_tokens(std::string_view s) {
  size_t count = 0;
  bool in_tok = false;
  for (char c : s) {
    if (is_ascii_space(c)) {
      in_tok = false;
    } else if (!in_tok) {
      in_tok = true;
      ++count;
    }
  }
  return count;
}

namespace {

bool tok_eq_ci(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    char x = a[i], y = b[i];
    if (x >= 'A' && x <= 'Z') x = static_cast<char>(x - 'A' + 'a');
    if (y >= 'A' && y <= 'Z') y = static_cast<char>(y - 'A' + 'a');
    if (x != y) return false;
  }
  return true;
}

}  // namespace

std::vector<std::pair<size_t, size_t>> find_token_seq(std::string_view haystack,
                                                      std::string_view needle) {
  std::vector<std::pair<size_t, size_t>> out;
  auto hay = tokenize_spans(haystack);
  auto ndl = tokenize_spans(needle);
  if (ndl.empty() || hay.size() < ndl.size()) return out;
  for (size_t i = 0; i + ndl.size() <= hay.size(); ++i) {
    bool ok = true;
    for (size_t j = 0; j < ndl.size(); ++j) {
      if (!tok_eq_ci(hay[i + j].text, ndl[j].text)) {
        ok = false;
        break;
      }
    }
    if (ok) out.emplace_back(hay[i].begin, hay[i + ndl.size() - 1].end);
  }
  return out;
}

bool contains_token_seq(std::string_view haystack, std::string_view needle) {
  return !find_token_seq(haystack, needle).empty();
}

}  // namespace kpgen
