#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kpgen::eval {

// Canonical form of a phrase for evaluation matching: lowercased,
// whitespace-tokenized, Porter-stemmed tokens.
struct NormalizedPhrase {
  std::vector<std::string> tokens;

  std::string joined() const;
  bool operator==(const NormalizedPhrase&) const = default;
  auto operator<=>(const NormalizedPhrase&) const = default;
};

// Throws Error on all-whitespace input. Tokens that are not purely
// alphabetic (numbers, mixed symbols) are lowercased but left unstemmed.
NormalizedPhrase normalize(std::string_view phrase);

// Normalized token stream of a document (title prepended to body), used
// for present/absent membership checks.
std::vector<std::string> normalize_doc_tokens(std::string_view title, std::string_view body);

// True if phrase's normalized tokens occur contiguously in doc_tokens.
bool phrase_in_tokens(const NormalizedPhrase& phrase, const std::vector<std::string>& doc_tokens);

}  // namespace kpgen::eval
