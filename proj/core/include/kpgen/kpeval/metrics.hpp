#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kpgen/kpeval/normalize.hpp"

namespace kpgen::eval {

// Precision / recall / F in percent.
struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

// F@O between the model's full prediction set and the gold set: both sides
// normalized and deduplicated, matches are exact normalized equality,
// cardinality is whatever the model produced (no cutoff).
Prf f_at_o(const std::vector<std::string>& predicted, const std::vector<std::string>& gold);

// Partition phrases into (present, absent) against title+body, by
// contiguous normalized-token-subsequence membership. Returns the original
// surface strings.
std::pair<std::vector<std::string>, std::vector<std::string>> split_present_absent(
    const std::vector<std::string>& phrases, std::string_view title, std::string_view body);

struct DocScore {
  std::string doc_id;
  Prf prf;
  bool empty_gold = false;          // excluded from macro averages
  size_t n_pred = 0;                // unique normalized predictions
  size_t n_pred_present = 0;        // predictions found in the document
  size_t n_pred_absent = 0;
  size_t n_gold_present = 0;
  size_t n_gold_absent = 0;
  size_t n_matched_present = 0;     // matched gold phrases by location class
  size_t n_matched_absent = 0;
};

DocScore evaluate_document(const std::string& doc_id,
                           const std::vector<std::string>& predicted,
                           const std::vector<std::string>& gold,
                           std::string_view title, std::string_view body);

struct EvalReport {
  std::string corpus_id;
  Prf macro;                        // macro average over scored documents
  std::vector<DocScore> per_doc;
  size_t n_docs = 0;
  size_t n_scored = 0;              // docs with non-empty gold
  size_t n_empty_gold = 0;
  double present_recall = 0.0;      // micro, over gold-present phrases
  double absent_recall = 0.0;       // micro, over gold-absent phrases
  double mean_predicted = 0.0;      // per scored doc
  double mean_pred_present = 0.0;
  double mean_pred_absent = 0.0;

  std::string to_json() const;
  std::string to_text() const;
};

struct GoldDoc {
  std::string title;
  std::string body;
  std::vector<std::string> keyphrases;
};

// predictions: (doc_id, phrases). Every doc_id must exist in gold; unknown
// ids raise an error listing the offenders.
EvalReport evaluate_corpus(const std::string& corpus_id,
                           const std::vector<std::pair<std::string, std::vector<std::string>>>& predictions,
                           const std::vector<std::pair<std::string, GoldDoc>>& gold);

}  // namespace kpgen::eval
