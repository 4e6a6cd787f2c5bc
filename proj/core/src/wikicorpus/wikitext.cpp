#include "kpgen/wikicorpus/wikitext.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <utility>

#include "kpgen/common/text.hpp"
#include "kpgen/instancegen/one2seq.hpp"

namespace kpgen::wiki {

std::string_view kind_name(AnnotationKind k) {
  switch (k) {
    case AnnotationKind::kItalic: return "italic";
    case AnnotationKind::kBold: return "bold";
    case AnnotationKind::kQuote: return "quote";
    case AnnotationKind::kWikilink: return "wikilink";
    case AnnotationKind::kSeeAlso: return "see_also";
    case AnnotationKind::kCategory: return "category";
  }
  return "unknown";
}

std::optional<AnnotationKind> kind_from_name(std::string_view name) {
  if (name == "italic") return AnnotationKind::kItalic;
  if (name == "bold") return AnnotationKind::kBold;
  if (name == "quote") return AnnotationKind::kQuote;
  if (name == "wikilink") return AnnotationKind::kWikilink;
  if (name == "see_also") return AnnotationKind::kSeeAlso;
  if (name == "category") return AnnotationKind::kCategory;
  return std::nullopt;
}

namespace {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

std::string lower_copy(std::string_view s) { return to_lower(s); }

// ---- sanitize phase -------------------------------------------------------

void strip_comments(std::string& s, size_t& warnings) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s.compare(i, 4, "<!--") == 0) {
      size_t end = s.find("-->", i + 4);
      if (end == std::string::npos) {
        ++warnings;
        break;  // unterminated comment swallows the rest
      }
      i = end + 3;
      continue;
    }
    out += s[i++];
  }
  s = std::move(out);
}

// Tags whose entire content is dropped (citations, formulas, raw blocks).
bool drops_content(std::string_view tag) {
  static const std::set<std::string, std::less<>> kDrop = {
      "ref", "math", "gallery", "timeline", "score", "source", "syntaxhighlight", "chem"};
  return kDrop.count(tag) > 0;
}

void strip_tags(std::string& s, size_t& warnings) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  const size_t n = s.size();
  while (i < n) {
    if (s[i] != '<') {
      out += s[i++];
      continue;
    }
    size_t j = i + 1;
    bool closing = false;
    if (j < n && s[j] == '/') {
      closing = true;
      ++j;
    }
    size_t name_start = j;
    while (j < n && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
    if (j == name_start) {
      out += s[i++];  // lone '<'
      continue;
    }
    std::string tag = lower_copy(std::string_view(s).substr(name_start, j - name_start));
    size_t gt = s.find('>', j);
    if (gt == std::string::npos) {
      ++warnings;
      out += s[i++];
      continue;
    }
    bool self_closing = gt > i && s[gt - 1] == '/';
    if (!closing && !self_closing && drops_content(tag)) {
      std::string close = "</" + tag;
      size_t end = s.find(close, gt + 1);
      if (end == std::string::npos) {
        ++warnings;
        i = n;  // unterminated container swallows the rest
        break;
      }
      size_t end_gt = s.find('>', end);
      i = end_gt == std::string::npos ? n : end_gt + 1;
      continue;
    }
    if (tag == "br") out += '\n';
    i = gt + 1;  // drop the tag itself, keep surrounding content
  }
  s = std::move(out);
}

void strip_templates(std::string& s, size_t& warnings) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  const size_t n = s.size();
  while (i < n) {
    if (i + 1 < n && s[i] == '{' && s[i + 1] == '{') {
      int depth = 1;
      size_t j = i + 2;
      while (j + 1 < n + 1 && depth > 0) {
        if (j + 1 < n && s[j] == '{' && s[j + 1] == '{') {
          ++depth;
          j += 2;
        } else if (j + 1 < n && s[j] == '}' && s[j + 1] == '}') {
          --depth;
          j += 2;
        } else if (j < n) {
          ++j;
        } else {
          break;
        }
      }
      if (depth > 0) {
        ++warnings;
        break;  // unbalanced: drop to end
      }
      i = j;
      continue;
    }
    out += s[i++];
  }
  s = std::move(out);
}

void strip_tables(std::string& s, size_t& warnings) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  const size_t n = s.size();
  bool at_line_start = true;
  while (i < n) {
    if (at_line_start && i + 1 < n && s[i] == '{' && s[i + 1] == '|') {
      int depth = 1;
      size_t j = i + 2;
      while (j + 1 < n && depth > 0) {
        if (s[j] == '{' && s[j + 1] == '|') {
          ++depth;
          j += 2;
        } else if (s[j] == '|' && s[j + 1] == '}') {
          --depth;
          j += 2;
        } else {
          ++j;
        }
      }
      if (depth > 0) {
        ++warnings;
        break;
      }
      i = j;
      at_line_start = false;
      continue;
    }
    at_line_start = s[i] == '\n';
    out += s[i++];
  }
  s = std::move(out);
}

void strip_magic_words(std::string& s) {
  // __TOC__, __NOTOC__ and friends
  size_t i = 0;
  std::string out;
  out.reserve(s.size());
  while (i < s.size()) {
    if (s.compare(i, 2, "__") == 0) {
      size_t j = i + 2;
      while (j < s.size() && (std::isupper(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
        if (s.compare(j, 2, "__") == 0) break;
        ++j;
      }
      if (s.compare(j, 2, "__") == 0 && j > i + 2) {
        i = j + 2;
        continue;
      }
    }
    out += s[i++];
  }
  s = std::move(out);
}

void decode_entities(std::string& s) {
  static const std::array<std::pair<std::string_view, std::string_view>, 9> kEntities = {{
      {"&amp;", "&"},
      {"&lt;", "<"},
      {"&gt;", ">"},
      {"&quot;", "\""},
      {"&apos;", "'"},
      {"&nbsp;", " "},
      {"&ndash;", "-"},
      {"&mdash;", "-"},
      {"&#39;", "'"},
  }};
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '&') {
      bool matched = false;
      for (const auto& [ent, rep] : kEntities) {
        if (s.compare(i, ent.size(), ent) == 0) {
          out += rep;
          i += ent.size();
          matched = true;
          break;
        }
      }
      if (matched) continue;
    }
    out += s[i++];
  }
  s = std::move(out);
}

void normalize_quotes(std::string& s) {
  // UTF-8 curly quotes to straight ones.
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
        static_cast<unsigned char>(s[i + 1]) == 0x80) {
      unsigned char c = static_cast<unsigned char>(s[i + 2]);
      if (c == 0x9C || c == 0x9D) {  // double quotes
        out += '"';
        i += 3;
        continue;
      }
      if (c == 0x98 || c == 0x99) {  // single quotes / apostrophe
        out += '\'';
        i += 3;
        continue;
      }
    }
    out += s[i++];
  }
  s = std::move(out);
}

// ---- section split --------------------------------------------------------

struct Section {
  std::string heading;  // empty for the lead
  std::string content;
};

std::vector<Section> split_sections(const std::string& text) {
  std::vector<Section> sections;
  sections.push_back({});
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line(text.data() + pos,
                          (eol == std::string::npos ? text.size() : eol) - pos);
    std::string_view t = trim(line);
    bool is_l2 = false;
    std::string_view heading;
    if (t.size() >= 5 && t.substr(0, 2) == "==" && t[2] != '=' &&
        t.substr(t.size() - 2) == "==" && t[t.size() - 3] != '=') {
      heading = trim(t.substr(2, t.size() - 4));
      is_l2 = !heading.empty();
    }
    if (is_l2) {
      sections.push_back({std::string(heading), {}});
    } else {
      sections.back().content.append(line);
      sections.back().content += '\n';
    }
    if (eol == std::string::npos) break;
    pos = eol + 1;
  }
  return sections;
}

bool is_skipped_section(std::string_view heading) {
  static const char* kSkip[] = {"references", "external links", "further reading",
                                "notes",      "bibliography",   "sources",
                                "footnotes",  "citations"};
  for (const char* h : kSkip) {
    if (iequals(heading, h)) return true;
  }
  return false;
}

// ---- wikilink helpers -----------------------------------------------------

bool is_dropped_namespace(std::string_view target) {
  size_t colon = target.find(':');
  if (colon == std::string_view::npos) return false;
  std::string ns = lower_copy(trim(target.substr(0, colon)));
  static const std::set<std::string, std::less<>> kDrop = {
      "file", "image", "media", "wikipedia", "wp",   "help", "template",
      "portal", "special", "talk", "user", "mw", "wikt", "wiktionary", "commons"};
  if (kDrop.count(ns)) return true;
  // interlanguage prefixes: two or three lowercase letters
  if (ns.size() >= 2 && ns.size() <= 3 &&
      std::all_of(ns.begin(), ns.end(), [](char c) { return c >= 'a' && c <= 'z'; }) &&
      ns != "the")
    return true;
  return false;
}

bool is_category(std::string_view target) {
  size_t colon = target.find(':');
  if (colon == std::string_view::npos) return false;
  return iequals(trim(target.substr(0, colon)), "category");
}

// ---- inline extraction ----------------------------------------------------

class InlineExtractor {
 public:
  InlineExtractor(const ParseOptions& opts, std::vector<PhraseAnnotation>& page_categories,
                  size_t& warnings)
      : opts_(opts), categories_(page_categories), warnings_(warnings) {}

  std::pair<std::string, std::vector<PhraseAnnotation>> run(const std::string& in) {
    in_ = &in;
    out_.clear();
    anns_.clear();
    bold_open_ = italic_open_ = -1;
    size_t i = 0;
    const size_t n = in.size();
    bool line_start = true;
    while (i < n) {
      if (line_start) {
        i = handle_line_start(i);
        line_start = false;
        if (i >= n) break;
      }
      char c = in[i];
      if (c == '\n') {
        close_dangling_formatting(i);
        emit_newline();
        ++i;
        line_start = true;
        continue;
      }
      if (c == '[' && i + 1 < n && in[i + 1] == '[') {
        i = handle_wikilink(i);
        continue;
      }
      if (c == '\'' && i + 1 < n && in[i + 1] == '\'') {
        i = handle_apostrophes(i);
        continue;
      }
      if (c == '[') {
        i = handle_external_link(i);
        continue;
      }
      if (c == ']' && i + 1 < n && in[i + 1] == ']') {
        ++warnings_;  // stray close
        i += 2;
        continue;
      }
      if (c == '"') {
        i = handle_quote(i);
        continue;
      }
      emit_char(c);
      ++i;
    }
    close_dangling_formatting(n);
    finalize_body();
    return {std::move(out_), std::move(anns_)};
  }

 private:
  const ParseOptions& opts_;
  std::vector<PhraseAnnotation>& categories_;
  size_t& warnings_;
  const std::string* in_ = nullptr;
  std::string out_;
  std::vector<PhraseAnnotation> anns_;
  long bold_open_ = -1;
  long italic_open_ = -1;

  void emit_char(char c) {
    if (c == ' ' || c == '\t') {
      if (out_.empty() || out_.back() == ' ' || out_.back() == '\n') return;
      out_ += ' ';
      return;
    }
    out_ += c;
  }

  void emit_newline() {
    while (!out_.empty() && out_.back() == ' ') out_.pop_back();
    if (out_.empty()) return;
    if (out_.size() >= 2 && out_[out_.size() - 1] == '\n' && out_[out_.size() - 2] == '\n') return;
    out_ += '\n';
  }

  // Plain emission for link anchors: no markup interpretation, bracket
  // characters filtered so the clean body never carries delimiters.
  void emit_plain(std::string_view text) {
    for (char c : text) {
      if (c == '[' || c == ']') {
        ++warnings_;
        continue;
      }
      if (c == '\n') {
        emit_char(' ');
        continue;
      }
      emit_char(c);
    }
  }

  size_t handle_line_start(size_t i) {
    const std::string& in = *in_;
    const size_t n = in.size();
    // horizontal rule
    if (in.compare(i, 4, "----") == 0) {
      size_t eol = in.find('\n', i);
      return eol == std::string::npos ? n : eol;
    }
    // heading markers (level-2 split already happened; strip any leftovers)
    if (i < n && in[i] == '=') {
      size_t run = 0;
      while (i + run < n && in[i + run] == '=') ++run;
      if (run >= 2) {
        size_t eol = in.find('\n', i);
        size_t end = eol == std::string::npos ? n : eol;
        std::string_view line(in.data() + i, end - i);
        std::string_view t = trim(line);
        size_t back = 0;
        while (back < t.size() && t[t.size() - 1 - back] == '=') ++back;
        if (back >= 2 && t.size() > run + back) {
          std::string_view title = trim(t.substr(run, t.size() - run - back));
          emit_plain(title);
          emit_newline();
          return end;
        }
      }
    }
    // list / indent markers
    size_t j = i;
    while (j < n && (in[j] == '*' || in[j] == '#' || in[j] == ':' || in[j] == ';')) ++j;
    if (j > i) {
      while (j < n && (in[j] == ' ' || in[j] == '\t')) ++j;
      return j;
    }
    return i;
  }

  size_t handle_wikilink(size_t i) {
    const std::string& in = *in_;
    const size_t n = in.size();
    int depth = 1;
    size_t j = i + 2;
    while (j < n && depth > 0) {
      if (j + 1 < n && in[j] == '[' && in[j + 1] == '[') {
        ++depth;
        j += 2;
      } else if (j + 1 < n && in[j] == ']' && in[j + 1] == ']') {
        --depth;
        j += 2;
      } else {
        ++j;
      }
    }
    if (depth > 0) {
      ++warnings_;  // unbalanced link, skip the opening delimiter
      return i + 2;
    }
    std::string_view content(in.data() + i + 2, j - i - 4);

    // split on top-level pipes
    std::vector<std::string_view> parts;
    size_t start = 0;
    int d = 0;
    for (size_t k = 0; k < content.size(); ++k) {
      if (k + 1 < content.size() && content[k] == '[' && content[k + 1] == '[') {
        ++d;
        ++k;
      } else if (k + 1 < content.size() && content[k] == ']' && content[k + 1] == ']') {
        --d;
        ++k;
      } else if (content[k] == '|' && d == 0) {
        parts.push_back(content.substr(start, k - start));
        start = k + 1;
      }
    }
    parts.push_back(content.substr(start));

    std::string target(trim(parts[0]));
    if (target.empty()) {
      ++warnings_;
      if (parts.size() > 1) emit_plain(trim(parts.back()));
      return j;
    }
    if (is_category(target)) {
      std::string_view name = trim(std::string_view(target).substr(target.find(':') + 1));
      if (!name.empty()) {
        PhraseAnnotation a;
        a.surface = std::string(name);
        a.kind = AnnotationKind::kCategory;
        categories_.push_back(std::move(a));
      }
      return j;
    }
    if (is_dropped_namespace(target)) return j;

    std::string_view anchor = parts.size() > 1 ? trim(parts.back()) : std::string_view(target);
    if (anchor.empty()) anchor = target;

    size_t span_begin = out_.size();
    emit_plain(anchor);
    // blended suffix: letters directly after ]] extend the link text
    while (j < n && std::isalpha(static_cast<unsigned char>(in[j]))) {
      emit_char(in[j]);
      ++j;
    }
    size_t span_end = out_.size();
    add_span_annotation(AnnotationKind::kWikilink, span_begin, span_end, target);
    return j;
  }

  size_t handle_external_link(size_t i) {
    const std::string& in = *in_;
    const size_t n = in.size();
    size_t j = i + 1;
    bool url = in.compare(j, 7, "http://") == 0 || in.compare(j, 8, "https://") == 0 ||
               in.compare(j, 6, "ftp://") == 0 || in.compare(j, 2, "//") == 0;
    if (!url) {
      emit_char('[');
      return i + 1;
    }
    size_t close = in.find(']', j);
    size_t eol = in.find('\n', j);
    if (close == std::string::npos || (eol != std::string::npos && eol < close)) {
      ++warnings_;
      return i + 1;
    }
    std::string_view content(in.data() + j, close - j);
    size_t space = content.find(' ');
    if (space != std::string_view::npos) emit_plain(trim(content.substr(space + 1)));
    return close + 1;
  }

  size_t handle_apostrophes(size_t i) {
    const std::string& in = *in_;
    size_t run = 0;
    while (i + run < in.size() && in[i + run] == '\'') ++run;
    size_t consumed = run;
    if (run == 1) {
      emit_char('\'');
      return i + 1;
    }
    if (run == 4) emit_char('\'');  // leading literal apostrophe
    if (run > 5) emit_char('\'');   // collapse extras to a single literal
    size_t effective = run >= 5 ? 5 : (run == 4 ? 3 : run);
    if (effective == 5) {
      toggle_italic();
      toggle_bold();
    } else if (effective == 3) {
      toggle_bold();
    } else if (effective == 2) {
      toggle_italic();
    }
    return i + consumed;
  }

  void toggle_bold() {
    if (bold_open_ < 0) {
      bold_open_ = static_cast<long>(out_.size());
    } else {
      add_span_annotation(AnnotationKind::kBold, static_cast<size_t>(bold_open_), out_.size(),
                          std::nullopt);
      bold_open_ = -1;
    }
  }

  void toggle_italic() {
    if (italic_open_ < 0) {
      italic_open_ = static_cast<long>(out_.size());
    } else {
      add_span_annotation(AnnotationKind::kItalic, static_cast<size_t>(italic_open_), out_.size(),
                          std::nullopt);
      italic_open_ = -1;
    }
  }

  void close_dangling_formatting(size_t) {
    if (bold_open_ >= 0 || italic_open_ >= 0) ++warnings_;
    bold_open_ = italic_open_ = -1;
  }

  static bool quote_opens(const std::string& in, size_t i) {
    if (i + 1 >= in.size()) return false;
    char next = in[i + 1];
    if (next == ' ' || next == '\n' || next == '\t' || next == '"') return false;
    if (i == 0) return true;
    char prev = in[i - 1];
    return prev == ' ' || prev == '\n' || prev == '\t' || prev == '(' || prev == '-';
  }

  static bool quote_closes(const std::string& in, size_t j) {
    if (j == 0 || in[j - 1] == ' ' || in[j - 1] == '\n' || in[j - 1] == '\t') return false;
    if (j + 1 >= in.size()) return true;
    char next = in[j + 1];
    return next == ' ' || next == '\n' || next == '\t' || next == '.' || next == ',' ||
           next == ';' || next == ':' || next == '!' || next == '?' || next == ')';
  }

  size_t handle_quote(size_t i) {
    const std::string& in = *in_;
    const size_t n = in.size();
    if (!quote_opens(in, i)) {
      emit_char('"');
      return i + 1;
    }
    // find the closing quote before the paragraph ends
    size_t j = i + 1;
    size_t close = std::string::npos;
    while (j < n) {
      if (in[j] == '"') {
        if (quote_closes(in, j)) close = j;
        break;  // first quote mark decides either way
      }
      if (in[j] == '\n') {
        if (j + 1 >= n || in[j + 1] == '\n') break;  // paragraph boundary
      }
      ++j;
    }
    if (close == std::string::npos) {
      emit_char('"');
      return i + 1;
    }
    std::string_view content(in.data() + i + 1, close - i - 1);
    std::string_view t = trim(content);
    bool qualifies = !t.empty() && count_tokens(t) <= opts_.max_phrase_tokens &&
                     t.find_first_of(".!?") == std::string_view::npos &&
                     t.find("[[") == std::string_view::npos &&
                     t.find("''") == std::string_view::npos;
    if (!qualifies) {
      emit_char('"');
      return i + 1;
    }
    size_t span_begin = out_.size();
    emit_plain(t);
    add_span_annotation(AnnotationKind::kQuote, span_begin, out_.size(), std::nullopt);
    return close + 1;
  }

  void add_span_annotation(AnnotationKind kind, size_t begin, size_t end,
                           std::optional<std::string> link_target) {
    // trim the span to the emitted surface
    while (begin < end && (out_[begin] == ' ' || out_[begin] == '\n')) ++begin;
    while (end > begin && (out_[end - 1] == ' ' || out_[end - 1] == '\n')) --end;
    if (begin >= end) return;
    std::string surface = out_.substr(begin, end - begin);
    if (count_tokens(surface) > opts_.max_phrase_tokens) return;
    if (instance::contains_control_token(surface)) {
      ++warnings_;
      return;
    }
    PhraseAnnotation a;
    a.surface = std::move(surface);
    a.kind = kind;
    a.char_span = CharSpan{begin, end};
    a.link_target = std::move(link_target);
    anns_.push_back(std::move(a));
  }

  void finalize_body() {
    // trim, shifting spans by the leading cut
    size_t lead = 0;
    while (lead < out_.size() && (out_[lead] == ' ' || out_[lead] == '\n')) ++lead;
    size_t tail = out_.size();
    while (tail > lead && (out_[tail - 1] == ' ' || out_[tail - 1] == '\n')) --tail;
    out_ = out_.substr(lead, tail - lead);
    std::vector<PhraseAnnotation> kept;
    for (auto& a : anns_) {
      if (!a.char_span) {
        kept.push_back(std::move(a));
        continue;
      }
      if (a.char_span->begin < lead || a.char_span->end > tail) continue;  // clipped away
      a.char_span->begin -= lead;
      a.char_span->end -= lead;
      kept.push_back(std::move(a));
    }
    anns_ = std::move(kept);
    std::stable_sort(anns_.begin(), anns_.end(), [](const auto& x, const auto& y) {
      return x.char_span->begin < y.char_span->begin;
    });
  }
};

// See-also list items become span-less annotations.
void extract_see_also(const std::string& content, std::vector<PhraseAnnotation>& out,
                      const ParseOptions& opts, size_t& warnings) {
  size_t pos = 0;
  while (pos <= content.size()) {
    size_t eol = content.find('\n', pos);
    std::string_view line(content.data() + pos,
                          (eol == std::string::npos ? content.size() : eol) - pos);
    std::string_view t = trim(line);
    if (!t.empty() && (t[0] == '*' || t[0] == '#')) {
      size_t k = 0;
      while (k < t.size() && (t[k] == '*' || t[k] == '#' || t[k] == ' ')) ++k;
      std::string_view item = t.substr(k);
      bool found_link = false;
      size_t search = 0;
      while (true) {
        size_t open = item.find("[[", search);
        if (open == std::string_view::npos) break;
        size_t close = item.find("]]", open + 2);
        if (close == std::string_view::npos) {
          ++warnings;
          break;
        }
        std::string_view inner = item.substr(open + 2, close - open - 2);
        size_t pipe = inner.find('|');
        std::string_view target = trim(pipe == std::string_view::npos ? inner : inner.substr(0, pipe));
        std::string_view anchor = pipe == std::string_view::npos ? target : trim(inner.substr(pipe + 1));
        if (!anchor.empty() && !is_category(target) && !is_dropped_namespace(target) &&
            count_tokens(anchor) <= opts.max_phrase_tokens &&
            !instance::contains_control_token(anchor)) {
          PhraseAnnotation a;
          a.surface = std::string(anchor);
          a.kind = AnnotationKind::kSeeAlso;
          a.link_target = std::string(target);
          out.push_back(std::move(a));
          found_link = true;
        }
        search = close + 2;
      }
      if (!found_link && !item.empty() && item.find("[[") == std::string_view::npos &&
          count_tokens(item) <= opts.max_phrase_tokens &&
          !instance::contains_control_token(item)) {
        PhraseAnnotation a;
        a.surface = std::string(item);
        a.kind = AnnotationKind::kSeeAlso;
        out.push_back(std::move(a));
      }
    }
    if (eol == std::string::npos) break;
    pos = eol + 1;
  }
}

void dedup_annotations(std::vector<PhraseAnnotation>& anns) {
  std::set<std::pair<std::string, int>> seen;
  std::vector<PhraseAnnotation> kept;
  for (auto& a : anns) {
    if (seen.insert({a.surface, static_cast<int>(a.kind)}).second) kept.push_back(std::move(a));
  }
  anns = std::move(kept);
}

}  // namespace

std::string sanitize_wikitext(const std::string& text, size_t& warnings) {
  std::string s = text;
  // normalize line endings first
  std::string tmp;
  tmp.reserve(s.size());
  for (char c : s) {
    if (c != '\r') tmp += c;
  }
  s = std::move(tmp);
  strip_comments(s, warnings);
  strip_tags(s, warnings);
  strip_templates(s, warnings);
  strip_tables(s, warnings);
  strip_magic_words(s);
  decode_entities(s);
  normalize_quotes(s);
  return s;
}

PageParseResult parse_wikitext(const RawWikiPage& page, const ParseOptions& opts) {
  PageParseResult result;
  if (trim(page.wikitext).empty()) {
    result.degenerate = true;
    return result;
  }
  std::string clean = sanitize_wikitext(page.wikitext, result.warnings);
  auto sections = split_sections(clean);

  std::vector<PhraseAnnotation> page_level;  // see-also + categories
  std::vector<std::pair<std::string, std::vector<PhraseAnnotation>>> bodies;

  for (const auto& sec : sections) {
    if (!sec.heading.empty() && iequals(trim(sec.heading), "see also")) {
      extract_see_also(sec.content, page_level, opts, result.warnings);
      // categories may still hide in the section text
      InlineExtractor sweep(opts, page_level, result.warnings);
      sweep.run(sec.content);
      continue;
    }
    if (!sec.heading.empty() && is_skipped_section(trim(sec.heading))) {
      InlineExtractor sweep(opts, page_level, result.warnings);
      sweep.run(sec.content);  // collect trailing categories only
      continue;
    }
    InlineExtractor ex(opts, page_level, result.warnings);
    auto [body, anns] = ex.run(sec.content);
    if (trim(body).empty()) continue;
    if (instance::contains_control_token(body)) {
      ++result.warnings;
      continue;
    }
    bodies.emplace_back(std::move(body), std::move(anns));
  }

  size_t idx = 0;
  for (auto& [body, anns] : bodies) {
    ParsedPassage p;
    p.doc.id = page.page_id + "#" + std::to_string(idx++);
    p.doc.title = page.title;
    p.doc.body = std::move(body);
    p.doc.domain_tag = opts.domain_tag;
    p.annotations = std::move(anns);
    for (const auto& a : page_level) p.annotations.push_back(a);
    dedup_annotations(p.annotations);
    result.passages.push_back(std::move(p));
  }
  if (result.passages.empty()) result.degenerate = true;
  return result;
}

}  // namespace kpgen::wiki
