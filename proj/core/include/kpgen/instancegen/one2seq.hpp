#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace kpgen::instance {

// Reserved control tokens of the serialization grammar. Documents whose
// body contains any of these are rejected at ingest.
inline constexpr std::string_view kBos = "<bos>";
inline constexpr std::string_view kSep = "<sep>";
inline constexpr std::string_view kEos = "<eos>";
inline constexpr std::string_view kPresentMask = "[PRESENT]";
inline constexpr std::string_view kSpanMask = "[MASK]";
inline constexpr std::string_view kHeaderOpen = "<header>";
inline constexpr std::string_view kHeaderClose = "</header>";

inline constexpr std::array<std::string_view, 7> kControlTokens = {
    kBos, kSep, kEos, kPresentMask, kSpanMask, kHeaderOpen, kHeaderClose};

bool is_control_token(std::string_view token);
bool contains_control_token(std::string_view text);

// "<bos> p1 <sep> p2 ... <eos>" with single-space joins. Each phrase is
// whitespace-normalized. Throws Error for empty phrases or phrases
// containing control tokens.
std::string serialize_one2seq(const std::vector<std::string>& phrases);

struct ParsedTarget {
  std::vector<std::string> phrases;
  bool truncated = false;  // no <eos>; trailing partial phrase dropped
};

// Exact inverse of serialize_one2seq on well-formed strings; a truncated
// string yields all complete phrases before the cut. A string that does not
// start with <bos> raises DataError("malformed target").
ParsedTarget parse_one2seq(std::string_view target);

// Cardinality header: "<header> present N absent N infill N </header>".
struct GroupCounts {
  size_t present = 0;
  size_t absent = 0;
  size_t infill = 0;
  bool operator==(const GroupCounts&) const = default;
};

std::string build_header(const GroupCounts& counts);

// Parses a header at the start of `source`; returns counts and the offset
// just past the header (spaces consumed). Throws DataError if no header.
GroupCounts parse_header(std::string_view source, size_t* body_offset = nullptr);

}  // namespace kpgen::instance
