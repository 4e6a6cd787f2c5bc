#include "kpgen/kpeval/normalize.hpp"

#include "kpgen/common/error.hpp"
#include "kpgen/common/text.hpp"
#include "kpgen/kpeval/porter.hpp"

namespace kpgen::eval {

namespace {

bool all_alpha(std::string_view t) {
  for (char c : t) {
    if (c < 'a' || c > 'z') return false;
  }
  return !t.empty();
}

std::string normalize_token(std::string_view raw) {
  std::string low = to_lower(raw);
  if (!all_alpha(low)) return low;
  std::string stemmed = porter_stem(low);
  return stemmed.empty() ? low : stemmed;
}

}  // namespace

std::string NormalizedPhrase::joined() const { return join(tokens, " "); }

NormalizedPhrase normalize(std::string_view phrase) {
  if (trim(phrase).empty()) throw Error("normalize: empty phrase");
  NormalizedPhrase out;
  for (const auto& tok : tokenize(phrase)) out.tokens.push_back(normalize_token(tok));
  return out;
}

std::vector<std::string> normalize_doc_tokens(std::string_view title, std::string_view body) {
  std::vector<std::string> out;
  for (const auto& tok : tokenize(title)) out.push_back(normalize_token(tok));
  for (const auto& tok : tokenize(body)) out.push_back(normalize_token(tok));
  return out;
}

bool phrase_in_tokens(const NormalizedPhrase& phrase, const std::vector<std::string>& doc_tokens) {
  const auto& p = phrase.tokens;
  if (p.empty() || doc_tokens.size() < p.size()) return false;
  for (size_t i = 0; i + p.size() <= doc_tokens.size(); ++i) {
    bool ok = true;
    for (size_t j = 0; j < p.size(); ++j) {
      if (doc_tokens[i + j] != p[j]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace kpgen::eval
