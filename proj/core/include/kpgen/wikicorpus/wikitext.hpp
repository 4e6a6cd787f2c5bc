#pragma once

#include <string>

#include "kpgen/wikicorpus/types.hpp"

namespace kpgen::wiki {

struct ParseOptions {
  size_t max_phrase_tokens = 16;  // longer annotation surfaces are discarded
  std::string domain_tag = "wiki";
};

// Parses one page of wikitext into clean passages plus phrase annotations.
//
// Pages are split into passages at top-level (level-2) section boundaries;
// the lead section is the first passage. "See also" list items and
// [[Category:...]] links become span-less annotations attached to every
// passage of the page. Boilerplate sections (references, external links,
// ...) produce no passage. Four in-text markup patterns produce annotations
// carrying exact byte spans into the clean body: bold, italic, qualifying
// "quoted" phrases and wikilinks. Templates, tables, refs and HTML tags are
// stripped. Malformed markup never fails the page; it is skipped and
// counted in `warnings`.
PageParseResult parse_wikitext(const RawWikiPage& page, const ParseOptions& opts = {});

// Sanitization pass only (templates/tables/tags/comments/entities), exposed
// for tests.
std::string sanitize_wikitext(const std::string& text, size_t& warnings);

}  // namespace kpgen::wiki
