#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kpgen::wiki {

struct RawWikiPage {
  std::string page_id;
  std::string title;
  std::string wikitext;
};

enum class AnnotationKind { kItalic, kBold, kQuote, kWikilink, kSeeAlso, kCategory };

std::string_view kind_name(AnnotationKind k);
std::optional<AnnotationKind> kind_from_name(std::string_view name);

// Byte offsets into the clean body, half-open.
struct CharSpan {
  size_t begin = 0;
  size_t end = 0;
  bool operator==(const CharSpan&) const = default;
};

struct PhraseAnnotation {
  std::string surface;
  AnnotationKind kind = AnnotationKind::kBold;
  std::optional<CharSpan> char_span;          // unset for see-also / category
  std::optional<std::string> link_target;     // wikilink destination title
};

struct CleanDocument {
  std::string id;
  std::string title;
  std::string body;
  std::string domain_tag;
  std::vector<std::string> keyphrases;        // gold labels when the corpus has them
};

struct ParsedPassage {
  CleanDocument doc;
  std::vector<PhraseAnnotation> annotations;
};

struct PageParseResult {
  std::vector<ParsedPassage> passages;
  size_t warnings = 0;
  bool degenerate = false;  // page yielded no usable passage
};

}  // namespace kpgen::wiki
