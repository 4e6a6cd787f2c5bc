#include "kpgen/instancegen/one2seq.hpp"

#include <charconv>

#include "kpgen/common/error.hpp"
#include "kpgen/common/text.hpp"

namespace kpgen::instance {

bool is_control_token(std::string_view token) {
  for (auto t : kControlTokens) {
    if (token == t) return true;
  }
  return false;
}

bool contains_control_token(std::string_view text) {
  for (auto t : kControlTokens) {
    if (text.find(t) != std::string_view::npos) return true;
  }
  return false;
}

std::string serialize_one2seq(const std::vector<std::string>& phrases) {
  std::string out(kBos);
  for (size_t i = 0; i < phrases.size(); ++i) {
    auto tokens = tokenize(phrases[i]);
    if (tokens.empty()) throw Error("serialize_one2seq: empty phrase");
    for (const auto& t : tokens) {
      if (is_control_token(t))
        throw Error("serialize_one2seq: phrase contains control token: " + phrases[i]);
    }
    out += ' ';
    if (i > 0) {
      out += kSep;
      out += ' ';
    }
    out += join(tokens, " ");
  }
  out += ' ';
  out += kEos;
  return out;
}

ParsedTarget parse_one2seq(std::string_view target) {
  auto tokens = tokenize(target);
  if (tokens.empty() || tokens[0] != kBos) throw DataError("malformed target: missing <bos>");

  ParsedTarget result;
  std::vector<std::string> current;
  bool closed = false;
  for (size_t i = 1; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    if (t == kEos) {
      closed = true;
      if (!current.empty()) result.phrases.push_back(join(current, " "));
      current.clear();
      break;
    }
    if (t == kSep) {
      if (!current.empty()) result.phrases.push_back(join(current, " "));
      current.clear();
      continue;
    }
    if (t == kBos) continue;  // stray restart, ignore
    current.push_back(t);
  }
  if (!closed) {
    // truncated decode: keep only complete phrases
    result.truncated = true;
  }
  return result;
}

std::string build_header(const GroupCounts& counts) {
  std::string out(kHeaderOpen);
  out += " present " + std::to_string(counts.present);
  out += " absent " + std::to_string(counts.absent);
  out += " infill " + std::to_string(counts.infill);
  out += ' ';
  out += kHeaderClose;
  return out;
}

GroupCounts parse_header(std::string_view source, size_t* body_offset) {
  auto spans = tokenize_spans(source);
  if (spans.size() < 8 || spans[0].text != kHeaderOpen || spans[1].text != "present" ||
      spans[3].text != "absent" || spans[5].text != "infill" || spans[7].text != kHeaderClose) {
    throw DataError("parse_header: no cardinality header");
  }
  auto to_count = [](std::string_view s) -> size_t {
    size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw DataError("parse_header: bad count '" + std::string(s) + "'");
    return v;
  };
  GroupCounts c;
  c.present = to_count(spans[2].text);
  c.absent = to_count(spans[4].text);
  c.infill = to_count(spans[6].text);
  if (body_offset) {
    size_t off = spans[7].end;
    while (off < source.size() && is_ascii_space(source[off])) ++off;
    *body_offset = off;
  }
  return c;
}

}  // namespace kpgen::instance
