#include "kpgen/wikicorpus/ingest.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "kpgen/common/error.hpp"
#include "kpgen/common/jsonl.hpp"
#include "kpgen/common/text.hpp"
#include "kpgen/instancegen/one2seq.hpp"

namespace kpgen::wiki {

using nlohmann::ordered_json;

namespace {

ordered_json doc_to_json(const CleanDocument& doc) {
  ordered_json j;
  j["id"] = doc.id;
  j["title"] = doc.title;
  j["body"] = doc.body;
  j["domain_tag"] = doc.domain_tag;
  if (!doc.keyphrases.empty()) j["keyphrases"] = doc.keyphrases;
  return j;
}

ordered_json annotation_to_json(const std::string& doc_id, const PhraseAnnotation& a) {
  ordered_json j;
  j["doc_id"] = doc_id;
  j["surface"] = a.surface;
  j["kind"] = std::string(kind_name(a.kind));
  if (a.char_span) {
    j["span"] = {a.char_span->begin, a.char_span->end};
  } else {
    j["span"] = nullptr;
  }
  if (a.link_target) {
    j["link_target"] = *a.link_target;
  } else {
    j["link_target"] = nullptr;
  }
  return j;
}

}  // namespace

IngestStats parse_wiki_dump(const std::string& dump_path, std::vector<ParsedPassage>& out,
                            const ParseOptions& opts) {
  IngestStats stats;
  for_each_line(dump_path, [&](size_t lineno, std::string_view line) {
    ++stats.records_in;
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      ++stats.rejected;
      ++stats.reject_reasons["bad_json"];
      return;
    }
    RawWikiPage page;
    page.page_id = j.value("id", "");
    page.title = j.value("title", "");
    page.wikitext = j.value("wikitext", "");
    if (page.page_id.empty()) {
      ++stats.rejected;
      ++stats.reject_reasons["missing_id"];
      return;
    }
    PageParseResult res = parse_wikitext(page, opts);
    stats.warnings += res.warnings;
    if (res.degenerate) {
      ++stats.degenerate_pages;
      ++stats.rejected;
      ++stats.reject_reasons["degenerate_page"];
      return;
    }
    for (auto& p : res.passages) {
      stats.tokens += count_tokens(p.doc.body);
      ++stats.accepted;
      out.push_back(std::move(p));
    }
    (void)lineno;
  });
  return stats;
}

IngestStats ingest_wiki_dump(const std::string& dump_path, const std::string& corpus_out,
                             const std::string& annotations_out, const ParseOptions& opts) {
  std::vector<ParsedPassage> passages;
  IngestStats stats = parse_wiki_dump(dump_path, passages, opts);

  AtomicFileWriter corpus(corpus_out);
  AtomicFileWriter anns(annotations_out);
  for (const auto& p : passages) {
    corpus.write_line(doc_to_json(p.doc).dump());
    for (const auto& a : p.annotations) {
      anns.write_line(annotation_to_json(p.doc.id, a).dump());
    }
  }
  corpus.commit();
  anns.commit();
  return stats;
}

IngestStats read_corpus_jsonl(const std::string& in_path, const std::string& domain_tag,
                              std::vector<CleanDocument>& out) {
  IngestStats stats;
  std::set<std::string> seen_ids;
  for_each_line(in_path, [&](size_t lineno, std::string_view line) {
    ++stats.records_in;
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      ++stats.rejected;
      ++stats.reject_reasons["bad_json"];
      return;
    }
    if (!j.contains("id") || !j["id"].is_string() || j["id"].get<std::string>().empty()) {
      ++stats.rejected;
      ++stats.reject_reasons["missing_id"];
      return;
    }
    if (!j.contains("body") || !j["body"].is_string()) {
      ++stats.rejected;
      ++stats.reject_reasons["missing_body"];
      return;
    }
    CleanDocument doc;
    doc.id = j["id"].get<std::string>();
    doc.title = j.value("title", "");
    doc.body = j["body"].get<std::string>();
    doc.domain_tag = domain_tag.empty() ? j.value("domain_tag", "") : domain_tag;
    if (j.contains("keyphrases") && j["keyphrases"].is_array()) {
      for (const auto& k : j["keyphrases"]) {
        if (k.is_string() && !trim(k.get<std::string>()).empty())
          doc.keyphrases.push_back(k.get<std::string>());
      }
    }
    if (!seen_ids.insert(doc.id).second) {
      ++stats.rejected;
      ++stats.reject_reasons["duplicate_id"];
      return;
    }
    if (trim(doc.body).empty()) {
      ++stats.rejected;
      ++stats.reject_reasons["empty_body"];
      return;
    }
    if (instance::contains_control_token(doc.body) ||
        instance::contains_control_token(doc.title)) {
      ++stats.rejected;
      ++stats.reject_reasons["control_token"];
      return;
    }
    stats.tokens += count_tokens(doc.body);
    ++stats.accepted;
    out.push_back(std::move(doc));
    (void)lineno;
  });
  return stats;
}

IngestStats ingest_jsonl(const std::string& in_path, const std::string& corpus_out,
                         const std::string& domain_tag) {
  std::vector<CleanDocument> docs;
  IngestStats stats = read_corpus_jsonl(in_path, domain_tag, docs);
  write_corpus(corpus_out, docs);
  return stats;
}

void write_corpus(const std::string& path, const std::vector<CleanDocument>& docs) {
  AtomicFileWriter w(path);
  for (const auto& d : docs) w.write_line(doc_to_json(d).dump());
  w.commit();
}

std::vector<CleanDocument> load_corpus(const std::string& path) {
  std::vector<CleanDocument> docs;
  for_each_line(path, [&](size_t lineno, std::string_view line) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw DataError(path + ":" + std::to_string(lineno) + ": bad corpus record");
    CleanDocument doc;
    doc.id = j.value("id", "");
    doc.title = j.value("title", "");
    doc.body = j.value("body", "");
    doc.domain_tag = j.value("domain_tag", "");
    if (j.contains("keyphrases") && j["keyphrases"].is_array()) {
      for (const auto& k : j["keyphrases"]) {
        if (k.is_string()) doc.keyphrases.push_back(k.get<std::string>());
      }
    }
    docs.push_back(std::move(doc));
  });
  return docs;
}

void write_annotations(const std::string& path, const std::vector<ParsedPassage>& passages) {
  AtomicFileWriter w(path);
  for (const auto& p : passages) {
    for (const auto& a : p.annotations) w.write_line(annotation_to_json(p.doc.id, a).dump());
  }
  w.commit();
}

std::map<std::string, std::vector<PhraseAnnotation>> load_annotations(const std::string& path) {
  std::map<std::string, std::vector<PhraseAnnotation>> out;
  for_each_line(path, [&](size_t lineno, std::string_view line) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw DataError(path + ":" + std::to_string(lineno) + ": bad annotation record");
    PhraseAnnotation a;
    std::string doc_id = j.value("doc_id", "");
    a.surface = j.value("surface", "");
    auto kind = kind_from_name(j.value("kind", ""));
    if (doc_id.empty() || a.surface.empty() || !kind)
      throw DataError(path + ":" + std::to_string(lineno) + ": bad annotation record");
    a.kind = *kind;
    if (j.contains("span") && j["span"].is_array() && j["span"].size() == 2) {
      a.char_span = CharSpan{j["span"][0].get<size_t>(), j["span"][1].get<size_t>()};
    }
    if (j.contains("link_target") && j["link_target"].is_string()) {
      a.link_target = j["link_target"].get<std::string>();
    }
    out[doc_id].push_back(std::move(a));
  });
  return out;
}

}  // namespace kpgen::wiki
