#include "kpgen/instancegen/instancegen.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "kpgen/common/error.hpp"
#include "kpgen/common/jsonl.hpp"
#include "kpgen/common/text.hpp"

namespace kpgen::instance {

using nlohmann::ordered_json;

void SamplingConfig::validate() const {
  if (present_cap + absent_cap + infill_cap > max_phrase_number) {
    throw ConfigError("SamplingConfig: per-group caps exceed max_phrase_number");
  }
  if (max_phrase_length == 0 || max_phrase_number == 0) {
    throw ConfigError("SamplingConfig: limits must be positive");
  }
}

void CorruptionConfig::validate() const {
  if (phrase_mask_rate < 0.0 || phrase_mask_rate > 1.0 || random_span_rate < 0.0 ||
      random_span_rate > 1.0) {
    throw ConfigError("CorruptionConfig: rates must lie in [0, 1]");
  }
  if (present_mask_token == span_mask_token) {
    throw ConfigError("CorruptionConfig: mask tokens must be distinct");
  }
  if (!is_control_token(present_mask_token) || !is_control_token(span_mask_token)) {
    throw ConfigError("CorruptionConfig: mask tokens must be reserved control tokens");
  }
}

namespace {

constexpr size_t kMaxInfillSpanTokens = 8;

struct Candidate {
  std::string surface;
  size_t first_occurrence = 0;  // char offset, only meaningful when present
  bool present = false;
};

// Shared partition core: dedup case-insensitively, enforce the length cap,
// split by occurrence, sample infill spans.
CandidateGroups partition(const wiki::CleanDocument& doc,
                          const std::vector<std::string>& surfaces, const SamplingConfig& cfg,
                          Rng& rng) {
  cfg.validate();
  CandidateGroups groups;
  std::set<std::string> seen;
  std::vector<Candidate> candidates;
  for (const auto& raw : surfaces) {
    std::string surface(trim(raw));
    if (surface.empty()) continue;
    if (count_tokens(surface) > cfg.max_phrase_length) continue;
    if (contains_control_token(surface)) continue;
    std::string key = to_lower(surface);
    if (!seen.insert(key).second) continue;
    Candidate c;
    c.surface = surface;
    auto occurrences = find_token_seq(doc.body, surface);
    c.present = !occurrences.empty();
    if (c.present) c.first_occurrence = occurrences.front().first;
    candidates.push_back(std::move(c));
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    if (a.present != b.present) return a.present;
    if (a.present) return a.first_occurrence < b.first_occurrence;
    return false;  // absent keeps input order
  });
  for (auto& c : candidates) {
    if (c.present) {
      groups.present.push_back(std::move(c.surface));
    } else {
      groups.absent.push_back(std::move(c.surface));
    }
  }

  // infill spans: uniform start, length uniform in 1..8 tokens, rejection
  // sampling on overlap
  auto tokens = tokenize_spans(doc.body);
  if (!tokens.empty() && cfg.infill_cap > 0) {
    std::vector<std::pair<size_t, size_t>> chosen;  // token index ranges
    size_t attempts = 0;
    const size_t max_attempts = cfg.infill_cap * 10;
    while (chosen.size() < cfg.infill_cap && attempts < max_attempts) {
      ++attempts;
      size_t start = static_cast<size_t>(rng.uniform(tokens.size()));
      size_t len = 1 + static_cast<size_t>(rng.uniform(kMaxInfillSpanTokens));
      size_t end = std::min(start + len, tokens.size());
      bool overlaps = false;
      for (const auto& [b, e] : chosen) overlaps = overlaps || (start < e && b < end);
      if (overlaps) continue;
      chosen.emplace_back(start, end);
    }
    std::sort(chosen.begin(), chosen.end());
    for (const auto& [b, e] : chosen) {
      InfillSpan span;
      span.char_begin = tokens[b].begin;
      span.char_end = tokens[e - 1].end;
      span.text = doc.body.substr(span.char_begin, span.char_end - span.char_begin);
      groups.infill.push_back(std::move(span));
    }
  }
  return groups;
}

std::vector<size_t> sorted_sample(Rng& rng, size_t n, size_t k) {
  auto idx = rng.sample_indices(n, k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

CandidateGroups group_candidates(const wiki::CleanDocument& doc,
                                 const std::vector<wiki::PhraseAnnotation>& annotations,
                                 const SamplingConfig& cfg, Rng& rng) {
  std::vector<std::string> surfaces;
  surfaces.reserve(annotations.size());
  for (const auto& a : annotations) surfaces.push_back(a.surface);
  return partition(doc, surfaces, cfg, rng);
}

CandidateGroups group_phrases(const wiki::CleanDocument& doc,
                              const std::vector<std::string>& phrases, const SamplingConfig& cfg,
                              Rng& rng) {
  return partition(doc, phrases, cfg, rng);
}

TargetSelection sample_target(const CandidateGroups& groups, const SamplingConfig& cfg, Rng& rng) {
  cfg.validate();
  TargetSelection sel;

  for (size_t i : sorted_sample(rng, groups.present.size(),
                                std::min(cfg.present_cap, groups.present.size()))) {
    sel.selected_present.push_back(groups.present[i]);
  }
  std::vector<std::string> absent;
  for (size_t i :
       sorted_sample(rng, groups.absent.size(), std::min(cfg.absent_cap, groups.absent.size()))) {
    absent.push_back(groups.absent[i]);
  }
  for (size_t i :
       sorted_sample(rng, groups.infill.size(), std::min(cfg.infill_cap, groups.infill.size()))) {
    sel.selected_infill.push_back(groups.infill[i]);
  }

  std::set<std::string> seen;
  auto push_unique = [&](const std::string& phrase, size_t& count) {
    if (sel.phrases.size() >= cfg.max_phrase_number) return false;
    std::string key = to_lower(std::string(trim(phrase)));
    if (key.empty() || !seen.insert(key).second) return false;
    sel.phrases.push_back(std::string(trim(phrase)));
    ++count;
    return true;
  };

  std::vector<std::string> kept_present;
  for (const auto& p : sel.selected_present) {
    if (push_unique(p, sel.counts.present)) kept_present.push_back(p);
  }
  sel.selected_present = std::move(kept_present);
  for (const auto& p : absent) push_unique(p, sel.counts.absent);
  std::vector<InfillSpan> kept_infill;
  for (const auto& s : sel.selected_infill) {
    if (push_unique(s.text, sel.counts.infill)) kept_infill.push_back(s);
  }
  sel.selected_infill = std::move(kept_infill);
  return sel;
}

CorruptResult corrupt_source(const std::string& body,
                             const std::vector<std::string>& selected_present,
                             const std::vector<InfillSpan>& infill_spans,
                             const CorruptionConfig& cfg, Rng& rng) {
  cfg.validate();

  struct Planned {
    size_t begin, end;
    const std::string* token;
  };
  std::vector<Planned> planned;
  auto overlaps_existing = [&](size_t b, size_t e) {
    for (const auto& p : planned) {
      if (b < p.end && p.begin < e) return true;
    }
    return false;
  };

  // present-phrase masking: independent coin per phrase, all occurrences
  for (const auto& phrase : selected_present) {
    if (!rng.bernoulli(cfg.phrase_mask_rate)) continue;
    for (const auto& [b, e] : find_token_seq(body, phrase)) {
      if (!overlaps_existing(b, e)) planned.push_back({b, e, &cfg.present_mask_token});
    }
  }
  // infill spans always masked
  for (const auto& s : infill_spans) {
    if (!overlaps_existing(s.char_begin, s.char_end)) {
      planned.push_back({s.char_begin, s.char_end, &cfg.span_mask_token});
    }
  }
  // random word masking over what is left
  if (cfg.random_span_rate > 0.0) {
    for (const auto& tok : tokenize_spans(body)) {
      if (overlaps_existing(tok.begin, tok.end)) continue;
      if (rng.bernoulli(cfg.random_span_rate)) {
        planned.push_back({tok.begin, tok.end, &cfg.span_mask_token});
      }
    }
  }

  std::sort(planned.begin(), planned.end(),
            [](const Planned& a, const Planned& b) { return a.begin < b.begin; });

  CorruptResult result;
  result.corrupted.reserve(body.size());
  size_t cursor = 0;
  for (const auto& p : planned) {
    result.corrupted.append(body, cursor, p.begin - cursor);
    MaskRecord rec;
    rec.orig_begin = p.begin;
    rec.orig_end = p.end;
    rec.out_begin = result.corrupted.size();
    result.corrupted += *p.token;
    rec.out_end = result.corrupted.size();
    rec.original = body.substr(p.begin, p.end - p.begin);
    rec.mask_token = *p.token;
    result.records.push_back(std::move(rec));
    cursor = p.end;
  }
  result.corrupted.append(body, cursor, body.size() - cursor);
  return result;
}

std::string restore_source(const std::string& corrupted, const std::vector<MaskRecord>& records) {
  std::string out = corrupted;
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    if (it->out_end > out.size() ||
        out.compare(it->out_begin, it->out_end - it->out_begin, it->mask_token) != 0) {
      throw DataError("restore_source: mask record does not match corrupted text");
    }
    out.replace(it->out_begin, it->out_end - it->out_begin, it->original);
  }
  return out;
}

namespace {

KPInstance assemble(const wiki::CleanDocument& doc, const TargetSelection& sel,
                    const CorruptionConfig& ccfg, const std::string& stage, Rng& rng) {
  KPInstance inst;
  CorruptResult corrupted =
      corrupt_source(doc.body, sel.selected_present, sel.selected_infill, ccfg, rng);
  inst.source = build_header(sel.counts) + " " + corrupted.corrupted;
  inst.target = serialize_one2seq(sel.phrases);
  inst.meta.doc_id = doc.id;
  inst.meta.stage = stage;
  inst.meta.counts = sel.counts;
  inst.meta.masks = std::move(corrupted.records);
  return inst;
}

}  // namespace

KPInstance build_instance(const wiki::CleanDocument& doc,
                          const std::vector<wiki::PhraseAnnotation>& annotations,
                          const SamplingConfig& scfg, const CorruptionConfig& ccfg,
                          const std::string& stage, Rng& rng) {
  auto groups = group_candidates(doc, annotations, scfg, rng);
  auto sel = sample_target(groups, scfg, rng);
  return assemble(doc, sel, ccfg, stage, rng);
}

KPInstance build_instance_from_phrases(const wiki::CleanDocument& doc,
                                       const std::vector<std::string>& phrases,
                                       const SamplingConfig& scfg, const CorruptionConfig& ccfg,
                                       const std::string& stage, Rng& rng) {
  auto groups = group_phrases(doc, phrases, scfg, rng);
  auto sel = sample_target(groups, scfg, rng);
  return assemble(doc, sel, ccfg, stage, rng);
}

KPInstance build_instance_premasked(const wiki::CleanDocument& doc,
                                    const std::vector<std::string>& phrases,
                                    const std::string& masked_source, const std::string& stage) {
  KPInstance inst;
  GroupCounts counts;
  counts.infill = phrases.size();
  inst.source = build_header(counts) + " " + masked_source;
  inst.target = serialize_one2seq(phrases);
  inst.meta.doc_id = doc.id;
  inst.meta.stage = stage;
  inst.meta.counts = counts;
  return inst;
}

void write_instances(const std::string& path, const std::vector<KPInstance>& instances) {
  AtomicFileWriter w(path);
  for (const auto& inst : instances) {
    ordered_json j;
    j["source"] = inst.source;
    j["target"] = inst.target;
    ordered_json meta;
    meta["doc_id"] = inst.meta.doc_id;
    meta["stage"] = inst.meta.stage;
    meta["present"] = inst.meta.counts.present;
    meta["absent"] = inst.meta.counts.absent;
    meta["infill"] = inst.meta.counts.infill;
    auto masks = ordered_json::array();
    for (const auto& m : inst.meta.masks) {
      masks.push_back({m.orig_begin, m.orig_end, m.out_begin, m.out_end, m.original, m.mask_token});
    }
    meta["masks"] = std::move(masks);
    j["meta"] = std::move(meta);
    w.write_line(j.dump());
  }
  w.commit();
}

std::vector<KPInstance> load_instances(const std::string& path) {
  std::vector<KPInstance> out;
  for_each_line(path, [&](size_t lineno, std::string_view line) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("source") || !j.contains("target")) {
      throw DataError(path + ":" + std::to_string(lineno) + ": bad instance record");
    }
    KPInstance inst;
    inst.source = j["source"].get<std::string>();
    inst.target = j["target"].get<std::string>();
    if (j.contains("meta")) {
      const auto& meta = j["meta"];
      inst.meta.doc_id = meta.value("doc_id", "");
      inst.meta.stage = meta.value("stage", "");
      inst.meta.counts.present = meta.value("present", 0u);
      inst.meta.counts.absent = meta.value("absent", 0u);
      inst.meta.counts.infill = meta.value("infill", 0u);
      if (meta.contains("masks")) {
        for (const auto& m : meta["masks"]) {
          MaskRecord rec;
          rec.orig_begin = m[0].get<size_t>();
          rec.orig_end = m[1].get<size_t>();
          rec.out_begin = m[2].get<size_t>();
          rec.out_end = m[3].get<size_t>();
          rec.original = m[4].get<std::string>();
          rec.mask_token = m[5].get<std::string>();
          inst.meta.masks.push_back(std::move(rec));
        }
      }
    }
    out.push_back(std::move(inst));
  });
  return out;
}

}  // namespace kpgen::instance
