#pragma once

#include <map>
#include <string>
#include <vector>

#include "kpgen/wikicorpus/types.hpp"
#include "kpgen/wikicorpus/wikitext.hpp"

namespace kpgen::wiki {

struct IngestStats {
  size_t records_in = 0;
  size_t accepted = 0;         // documents written
  size_t rejected = 0;
  size_t degenerate_pages = 0; // wiki pages with no usable passage
  size_t warnings = 0;         // malformed-markup skips
  size_t tokens = 0;           // whitespace tokens over accepted bodies
  std::map<std::string, size_t> reject_reasons;
};

// Wikitext dump (JSONL: id, title, wikitext) -> corpus + annotations files.
// Input order is preserved; output is deterministic.
IngestStats ingest_wiki_dump(const std::string& dump_path, const std::string& corpus_out,
                             const std::string& annotations_out, const ParseOptions& opts = {});

// In-memory variant used by the pipeline.
IngestStats parse_wiki_dump(const std::string& dump_path, std::vector<ParsedPassage>& out,
                            const ParseOptions& opts = {});

// Generic corpus (JSONL: id, title, body, optional keyphrases). Records
// missing a body, with duplicate ids, or with control tokens in the body
// are rejected and counted.
IngestStats ingest_jsonl(const std::string& in_path, const std::string& corpus_out,
                         const std::string& domain_tag);

IngestStats read_corpus_jsonl(const std::string& in_path, const std::string& domain_tag,
                              std::vector<CleanDocument>& out);

// Corpus / annotation / prediction artifact IO.
void write_corpus(const std::string& path, const std::vector<CleanDocument>& docs);
std::vector<CleanDocument> load_corpus(const std::string& path);

void write_annotations(const std::string& path,
                       const std::vector<ParsedPassage>& passages);
std::map<std::string, std::vector<PhraseAnnotation>> load_annotations(const std::string& path);

}  // namespace kpgen::wiki
