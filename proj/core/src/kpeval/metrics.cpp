#include "kpgen/kpeval/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kpgen/common/error.hpp"
#include "kpgen/common/text.hpp"

namespace kpgen::eval {

namespace {

// Normalize + dedup, keeping first-occurrence order.
std::vector<NormalizedPhrase> normalize_set(const std::vector<std::string>& phrases) {
  std::vector<NormalizedPhrase> out;
  std::set<std::vector<std::string>> seen;
  for (const auto& p : phrases) {
    if (trim(p).empty()) continue;
    NormalizedPhrase np = normalize(p);
    if (seen.insert(np.tokens).second) out.push_back(std::move(np));
  }
  return out;
}

}  // namespace

Prf f_at_o(const std::vector<std::string>& predicted, const std::vector<std::string>& gold) {
  auto pred = normalize_set(predicted);
  auto gd = normalize_set(gold);
  if (pred.empty() || gd.empty()) return {};

  std::set<std::vector<std::string>> gold_set;
  for (const auto& g : gd) gold_set.insert(g.tokens);
  size_t matches = 0;
  for (const auto& p : pred) {
    if (gold_set.count(p.tokens)) ++matches;
  }
  Prf out;
  out.precision = 100.0 * static_cast<double>(matches) / static_cast<double>(pred.size());
  out.recall = 100.0 * static_cast<double>(matches) / static_cast<double>(gd.size());
  if (out.precision + out.recall > 0) {
    out.f = 2.0 * out.precision * out.recall / (out.precision + out.recall);
  }
  return out;
}

std::pair<std::vector<std::string>, std::vector<std::string>> split_present_absent(
    const std::vector<std::string>& phrases, std::string_view title, std::string_view body) {
  auto doc_tokens = normalize_doc_tokens(title, body);
  std::vector<std::string> present, absent;
  for (const auto& p : phrases) {
    if (trim(p).empty()) continue;
    if (phrase_in_tokens(normalize(p), doc_tokens)) {
      present.push_back(p);
    } else {
      absent.push_back(p);
    }
  }
  return {present, absent};
}

DocScore evaluate_document(const std::string& doc_id,
                           const std::vector<std::string>& predicted,
                           const std::vector<std::string>& gold,
                           std::string_view title, std::string_view body) {
  DocScore s;
  s.doc_id = doc_id;

  auto pred = normalize_set(predicted);
  auto gd = normalize_set(gold);
  s.n_pred = pred.size();
  s.empty_gold = gd.empty();

  auto doc_tokens = normalize_doc_tokens(title, body);
  std::set<std::vector<std::string>> pred_set;
  for (const auto& p : pred) {
    pred_set.insert(p.tokens);
    if (phrase_in_tokens(p, doc_tokens)) {
      ++s.n_pred_present;
    } else {
      ++s.n_pred_absent;
    }
  }

  size_t matches = 0;
  for (const auto& g : gd) {
    bool present = phrase_in_tokens(g, doc_tokens);
    if (present) {
      ++s.n_gold_present;
    } else {
      ++s.n_gold_absent;
    }
    if (pred_set.count(g.tokens)) {
      ++matches;
      if (present) {
        ++s.n_matched_present;
      } else {
        ++s.n_matched_absent;
      }
    }
  }

  if (!pred.empty() && !gd.empty()) {
    s.prf.precision = 100.0 * static_cast<double>(matches) / static_cast<double>(pred.size());
    s.prf.recall = 100.0 * static_cast<double>(matches) / static_cast<double>(gd.size());
    if (s.prf.precision + s.prf.recall > 0) {
      s.prf.f = 2.0 * s.prf.precision * s.prf.recall / (s.prf.precision + s.prf.recall);
    }
  }
  return s;
}

EvalReport evaluate_corpus(
    const std::string& corpus_id,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& predictions,
    const std::vector<std::pair<std::string, GoldDoc>>& gold) {
  std::map<std::string, const GoldDoc*> gold_by_id;
  for (const auto& [id, doc] : gold) gold_by_id[id] = &doc;

  std::vector<std::string> missing;
  for (const auto& [id, _] : predictions) {
    if (!gold_by_id.count(id)) missing.push_back(id);
  }
  if (!missing.empty()) {
    std::string msg = "evaluate_corpus: prediction doc_ids missing from gold corpus:";
    for (const auto& id : missing) msg += " " + id;
    throw DataError(msg);
  }

  EvalReport report;
  report.corpus_id = corpus_id;
  report.n_docs = predictions.size();

  double sum_p = 0, sum_r = 0, sum_f = 0;
  size_t gold_present_total = 0, gold_absent_total = 0;
  size_t matched_present_total = 0, matched_absent_total = 0;
  double sum_pred = 0, sum_pred_present = 0, sum_pred_absent = 0;

  for (const auto& [id, phrases] : predictions) {
    const GoldDoc& g = *gold_by_id.at(id);
    DocScore s = evaluate_document(id, phrases, g.keyphrases, g.title, g.body);
    if (s.empty_gold) {
      ++report.n_empty_gold;
    } else {
      ++report.n_scored;
      sum_p += s.prf.precision;
      sum_r += s.prf.recall;
      sum_f += s.prf.f;
      gold_present_total += s.n_gold_present;
      gold_absent_total += s.n_gold_absent;
      matched_present_total += s.n_matched_present;
      matched_absent_total += s.n_matched_absent;
      sum_pred += static_cast<double>(s.n_pred);
      sum_pred_present += static_cast<double>(s.n_pred_present);
      sum_pred_absent += static_cast<double>(s.n_pred_absent);
    }
    report.per_doc.push_back(std::move(s));
  }

  if (report.n_scored > 0) {
    double n = static_cast<double>(report.n_scored);
    report.macro = {sum_p / n, sum_r / n, sum_f / n};
    report.mean_predicted = sum_pred / n;
    report.mean_pred_present = sum_pred_present / n;
    report.mean_pred_absent = sum_pred_absent / n;
  }
  if (gold_present_total > 0) {
    report.present_recall =
        100.0 * static_cast<double>(matched_present_total) / static_cast<double>(gold_present_total);
  }
  if (gold_absent_total > 0) {
    report.absent_recall =
        100.0 * static_cast<double>(matched_absent_total) / static_cast<double>(gold_absent_total);
  }
  return report;
}

std::string EvalReport::to_json() const {
  nlohmann::ordered_json j;
  j["corpus"] = corpus_id;
  j["macro"] = {{"precision", macro.precision}, {"recall", macro.recall}, {"f_at_o", macro.f}};
  j["n_docs"] = n_docs;
  j["n_scored"] = n_scored;
  j["n_empty_gold"] = n_empty_gold;
  j["present_recall"] = present_recall;
  j["absent_recall"] = absent_recall;
  j["mean_predicted"] = mean_predicted;
  j["mean_pred_present"] = mean_pred_present;
  j["mean_pred_absent"] = mean_pred_absent;
  auto docs = nlohmann::ordered_json::array();
  for (const auto& d : per_doc) {
    docs.push_back({{"doc_id", d.doc_id},
                    {"precision", d.prf.precision},
                    {"recall", d.prf.recall},
                    {"f", d.prf.f},
                    {"empty_gold", d.empty_gold}});
  }
  j["per_document"] = std::move(docs);
  return j.dump(2);
}

std::string EvalReport::to_text() const {
  std::ostringstream out;
  char buf[160];
  out << "corpus: " << corpus_id << "\n";
  std::snprintf(buf, sizeof(buf), "  docs %zu  scored %zu  empty-gold %zu\n", n_docs, n_scored,
                n_empty_gold);
  out << buf;
  std::snprintf(buf, sizeof(buf), "  %-12s %8s %8s %8s\n", "", "P", "R", "F@O");
  out << buf;
  std::snprintf(buf, sizeof(buf), "  %-12s %8.2f %8.2f %8.2f\n", "macro", macro.precision,
                macro.recall, macro.f);
  out << buf;
  std::snprintf(buf, sizeof(buf), "  present recall %.2f   absent recall %.2f\n", present_recall,
                absent_recall);
  out << buf;
  std::snprintf(buf, sizeof(buf),
                "  mean predicted %.2f (present %.2f, absent %.2f) per document\n", mean_predicted,
                mean_pred_present, mean_pred_absent);
  out << buf;
  return out.str();
}

}  // namespace kpgen::eval
