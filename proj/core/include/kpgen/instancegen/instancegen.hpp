#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kpgen/common/rng.hpp"
#include "kpgen/instancegen/one2seq.hpp"
#include "kpgen/wikicorpus/types.hpp"

namespace kpgen::instance {

struct SamplingConfig {
  size_t max_phrase_number = 16;  // total target phrases
  size_t max_phrase_length = 16;  // tokens per phrase
  size_t present_cap = 8;
  size_t absent_cap = 4;
  size_t infill_cap = 4;

  void validate() const;  // caps must sum to <= max_phrase_number
};

struct CorruptionConfig {
  double phrase_mask_rate = 0.1;
  double random_span_rate = 0.05;
  std::string present_mask_token{kPresentMask};
  std::string span_mask_token{kSpanMask};

  void validate() const;
};

// A body-internal span used as an infilling candidate.
struct InfillSpan {
  size_t char_begin = 0;
  size_t char_end = 0;
  std::string text;
};

struct CandidateGroups {
  std::vector<std::string> present;  // ordered by first occurrence in body
  std::vector<std::string> absent;   // input order
  std::vector<InfillSpan> infill;    // position order, non-overlapping
};

// Partition annotation surfaces into present/absent by case-insensitive
// whole-token occurrence in the body (the occurrence rule beats the markup
// origin), dedup case-insensitively, drop over-long surfaces, and draw
// infill spans.
CandidateGroups group_candidates(const wiki::CleanDocument& doc,
                                 const std::vector<wiki::PhraseAnnotation>& annotations,
                                 const SamplingConfig& cfg, Rng& rng);

// Same partition for a plain phrase list (gold keyphrases, pseudo labels).
CandidateGroups group_phrases(const wiki::CleanDocument& doc,
                              const std::vector<std::string>& phrases, const SamplingConfig& cfg,
                              Rng& rng);

struct TargetSelection {
  std::vector<std::string> phrases;  // present by occurrence, then absent, then infill
  GroupCounts counts;
  std::vector<std::string> selected_present;
  std::vector<InfillSpan> selected_infill;
};

TargetSelection sample_target(const CandidateGroups& groups, const SamplingConfig& cfg, Rng& rng);

// One replacement performed by corrupt_source. Applying records in reverse
// order of out spans reconstructs the original body byte-exactly.
struct MaskRecord {
  size_t orig_begin = 0;
  size_t orig_end = 0;
  size_t out_begin = 0;
  size_t out_end = 0;
  std::string original;
  std::string mask_token;
};

struct CorruptResult {
  std::string corrupted;
  std::vector<MaskRecord> records;
};

// Each selected present phrase is masked (all whole-token occurrences) with
// probability phrase_mask_rate; every infill span is masked; each remaining
// word is masked with probability random_span_rate.
CorruptResult corrupt_source(const std::string& body,
                             const std::vector<std::string>& selected_present,
                             const std::vector<InfillSpan>& infill_spans,
                             const CorruptionConfig& cfg, Rng& rng);

// Undo a corruption using its mask records (exact inverse).
std::string restore_source(const std::string& corrupted, const std::vector<MaskRecord>& records);

struct InstanceMeta {
  std::string doc_id;
  std::string stage;  // PT / DA / FT / strategy label
  GroupCounts counts;
  std::vector<MaskRecord> masks;
};

struct KPInstance {
  std::string source;  // header + corrupted body
  std::string target;  // One2Seq serialization
  InstanceMeta meta;
};

// Wikipedia-style instance: candidates from annotations.
KPInstance build_instance(const wiki::CleanDocument& doc,
                          const std::vector<wiki::PhraseAnnotation>& annotations,
                          const SamplingConfig& scfg, const CorruptionConfig& ccfg,
                          const std::string& stage, Rng& rng);

// Instance from an explicit phrase list (gold labels, TL/NP pseudo labels).
KPInstance build_instance_from_phrases(const wiki::CleanDocument& doc,
                                       const std::vector<std::string>& phrases,
                                       const SamplingConfig& scfg, const CorruptionConfig& ccfg,
                                       const std::string& stage, Rng& rng);

// Instance whose source was already masked by the labeling strategy (RS):
// phrases become infill-group targets, no further corruption.
KPInstance build_instance_premasked(const wiki::CleanDocument& doc,
                                    const std::vector<std::string>& phrases,
                                    const std::string& masked_source, const std::string& stage);

void write_instances(const std::string& path, const std::vector<KPInstance>& instances);
std::vector<KPInstance> load_instances(const std::string& path);

}  // namespace kpgen::instance
