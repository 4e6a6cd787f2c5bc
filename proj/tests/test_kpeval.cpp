#include <doctest.h>

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "kpgen/common/error.hpp"
#include "kpgen/common/rng.hpp"
#include "kpgen/kpeval/metrics.hpp"
#include "kpgen/kpeval/normalize.hpp"
#include "kpgen/kpeval/overlap.hpp"

using namespace kpgen;
using namespace kpgen::eval;

namespace {

std::string random_token(Rng& rng) {
  static const char alpha[] = "abcdefghijklmnopqrstuvwxyz0123456789";
  size_t len = 1 + rng.uniform(8);
  std::string w;
  for (size_t i = 0; i < len; ++i) w += alpha[rng.uniform(36)];
  return w;
}

std::string random_phrase(Rng& rng) {
  size_t n = 1 + rng.uniform(3);
  std::string p;
  for (size_t i = 0; i < n; ++i) {
    if (i) p += ' ';
    p += random_token(rng);
  }
  return p;
}

// Brute-force F@O oracle: pairwise comparison of normalized phrase sets,
// independent of the set-based implementation path.
Prf brute_force_f(const std::vector<std::string>& pred, const std::vector<std::string>& gold) {
  std::vector<std::string> pn, gn;
  for (const auto& p : pred) {
    std::string j = normalize(p).joined();
    bool dup = false;
    for (const auto& q : pn) dup = dup || q == j;
    if (!dup) pn.push_back(j);
  }
  for (const auto& g : gold) {
    std::string j = normalize(g).joined();
    bool dup = false;
    for (const auto& q : gn) dup = dup || q == j;
    if (!dup) gn.push_back(j);
  }
  if (pn.empty() || gn.empty()) return {};
  size_t matches = 0;
  for (const auto& p : pn) {
    for (const auto& g : gn) {
      if (p == g) {
        ++matches;
        break;
      }
    }
  }
  Prf out;
  out.precision = 100.0 * matches / pn.size();
  out.recall = 100.0 * matches / gn.size();
  if (out.precision + out.recall > 0)
    out.f = 2 * out.precision * out.recall / (out.precision + out.recall);
  return out;
}

}  // namespace

TEST_CASE("normalize lowercases, tokenizes and stems") {
  auto np = normalize("Neural Networks");
  REQUIRE(np.tokens.size() == 2);
  CHECK(np.tokens[0] == "neural");
  CHECK(np.tokens[1] == "network");

  CHECK(normalize("cloud").tokens == std::vector<std::string>{"cloud"});
  CHECK_THROWS_AS(normalize("   "), Error);
}

TEST_CASE("normalize is idempotent over random phrases") {
  Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    std::string p = random_phrase(rng);
    CAPTURE(p);
    auto once = normalize(p);
    auto twice = normalize(once.joined());
    CHECK(once == twice);
  }
}

TEST_CASE("split_present_absent requires contiguous token match") {
  std::string body = "we study transfer of labeling transfer methods";
  auto [present, absent] = split_present_absent({"labeling transfer", "transfer labeling"}, "", body);
  REQUIRE(present.size() == 1);
  CHECK(present[0] == "labeling transfer");
  REQUIRE(absent.size() == 1);
  CHECK(absent[0] == "transfer labeling");
}

TEST_CASE("split_present_absent matches under stemming and casing") {
  auto [present, absent] =
      split_present_absent({"Graph Networks"}, "On graphs", "networks are everywhere");
  // title is prepended, so "graph networks" ~ "graphs networks" contiguous
  // across the title/body seam only if adjacent; here "graphs" ends the
  // title and "networks" starts the body.
  CHECK(present.size() == 1);
  CHECK(absent.empty());
}

TEST_CASE("split_present_absent agrees with a window-scan oracle") {
  Rng rng(512);
  std::vector<std::string> vocab;
  for (int i = 0; i < 12; ++i) vocab.push_back(random_token(rng));
  for (int trial = 0; trial < 500; ++trial) {
    std::string body;
    size_t body_len = 3 + rng.uniform(20);
    std::vector<std::string> body_toks;
    for (size_t i = 0; i < body_len; ++i) {
      const std::string& t = vocab[rng.uniform(vocab.size())];
      body_toks.push_back(t);
      if (i) body += ' ';
      body += t;
    }
    size_t phrase_len = 1 + rng.uniform(3);
    std::string phrase;
    std::vector<std::string> phrase_toks;
    for (size_t i = 0; i < phrase_len; ++i) {
      const std::string& t = vocab[rng.uniform(vocab.size())];
      phrase_toks.push_back(t);
      if (i) phrase += ' ';
      phrase += t;
    }

    // oracle: stem both sides, scan every window
    auto stem_all = [](const std::vector<std::string>& ts) {
      std::vector<std::string> out;
      for (const auto& t : ts) out.push_back(normalize(t).tokens[0]);
      return out;
    };
    auto bt = stem_all(body_toks);
    auto pt = stem_all(phrase_toks);
    bool expect = false;
    for (size_t i = 0; i + pt.size() <= bt.size() && !expect; ++i) {
      bool all = true;
      for (size_t j = 0; j < pt.size(); ++j) all = all && bt[i + j] == pt[j];
      expect = all;
    }

    auto [present, absent] = split_present_absent({phrase}, "", body);
    CAPTURE(body);
    CAPTURE(phrase);
    CHECK(present.size() == (expect ? 1u : 0u));
  }
}

TEST_CASE("f_at_o identity and hand-computed cases") {
  // identical sets under casing/order changes
  auto prf = f_at_o({"Beam Search", "clouds"}, {"cloud", "beam search"});
  CHECK(prf.f == doctest::Approx(100.0));

  // {a,b,c} vs {b,c,d}
  prf = f_at_o({"a", "b", "c"}, {"b", "c", "d"});
  CHECK(prf.precision == doctest::Approx(66.6666666667));
  CHECK(prf.recall == doctest::Approx(66.6666666667));
  CHECK(prf.f == doctest::Approx(66.6666666667));

  // empty prediction with non-empty gold
  prf = f_at_o({}, {"x"});
  CHECK(prf.precision == 0.0);
  CHECK(prf.recall == 0.0);
  CHECK(prf.f == 0.0);
}

TEST_CASE("f_at_o matches the brute-force oracle on 1000 random cases") {
  Rng rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::string> pred, gold;
    std::vector<std::string> pool;
    for (int i = 0; i < 6; ++i) pool.push_back(random_phrase(rng));
    size_t np = rng.uniform(5), ng = 1 + rng.uniform(4);
    for (size_t i = 0; i < np; ++i) pred.push_back(pool[rng.uniform(pool.size())]);
    for (size_t i = 0; i < ng; ++i) gold.push_back(pool[rng.uniform(pool.size())]);

    Prf got = f_at_o(pred, gold);
    Prf want = brute_force_f(pred, gold);
    CHECK(got.precision == doctest::Approx(want.precision).epsilon(1e-12));
    CHECK(got.recall == doctest::Approx(want.recall).epsilon(1e-12));
    CHECK(got.f == doctest::Approx(want.f).epsilon(1e-12));
  }
}

TEST_CASE("f_at_o P==R==F when sizes are equal") {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> pred, gold;
    std::set<std::string> used;
    for (int i = 0; i < 4; ++i) {
      pred.push_back("p" + std::to_string(trial) + "x" + std::to_string(i));
      gold.push_back(rng.bernoulli(0.5) ? pred.back()
                                        : "g" + std::to_string(trial) + "y" + std::to_string(i));
    }
    Prf prf = f_at_o(pred, gold);
    CHECK(prf.precision == doctest::Approx(prf.recall));
    if (prf.precision > 0) CHECK(prf.f == doctest::Approx(prf.precision));
  }
}

TEST_CASE("evaluate_corpus macro averaging and empty-gold exclusion") {
  std::vector<std::pair<std::string, GoldDoc>> gold;
  gold.emplace_back("d1", GoldDoc{"t", "alpha beta", {"alpha"}});
  gold.emplace_back("d2", GoldDoc{"t", "gamma delta", {"gamma"}});
  gold.emplace_back("d3", GoldDoc{"t", "noise", {}});

  std::vector<std::pair<std::string, std::vector<std::string>>> preds;
  preds.emplace_back("d1", std::vector<std::string>{"alpha"});   // F = 100
  preds.emplace_back("d2", std::vector<std::string>{"wrong"});   // F = 0
  preds.emplace_back("d3", std::vector<std::string>{"alpha"});   // excluded

  auto report = evaluate_corpus("demo", preds, gold);
  CHECK(report.n_scored == 2);
  CHECK(report.n_empty_gold == 1);
  CHECK(report.macro.f == doctest::Approx(50.0));

  // single-document corpus: report equals the document triple
  auto single = evaluate_corpus("one", {{"d1", {"alpha", "zeta"}}}, gold);
  auto doc = evaluate_document("d1", {"alpha", "zeta"}, {"alpha"}, "t", "alpha beta");
  CHECK(single.macro.f == doctest::Approx(doc.prf.f));

  // unknown doc id
  CHECK_THROWS_AS(evaluate_corpus("bad", {{"nope", {"x"}}}, gold), DataError);
}

TEST_CASE("evaluate_corpus mean predicted counts") {
  std::vector<std::pair<std::string, GoldDoc>> gold;
  gold.emplace_back("d1", GoldDoc{"", "alpha beta gamma", {"alpha", "tagword"}});
  std::vector<std::pair<std::string, std::vector<std::string>>> preds;
  // 2 present in doc, 1 absent
  preds.emplace_back("d1", std::vector<std::string>{"alpha", "beta", "offdoc"});
  auto report = evaluate_corpus("demo", preds, gold);
  CHECK(report.mean_predicted == doctest::Approx(3.0));
  CHECK(report.mean_pred_present == doctest::Approx(2.0));
  CHECK(report.mean_pred_absent == doctest::Approx(1.0));
  CHECK(report.present_recall == doctest::Approx(100.0));
  CHECK(report.absent_recall == doctest::Approx(0.0));
}

TEST_CASE("overlap matrix on the A/B fixture") {
  auto m = overlap_matrix({{"A", {"a", "b"}}, {"B", {"b"}}});
  CHECK(m.raw[0][0] == 2);
  CHECK(m.raw[1][1] == 1);
  CHECK(m.raw[0][1] == 1);
  CHECK(m.raw[1][0] == 1);
  CHECK(m.normalized[0][0] == doctest::Approx(100.0));
  CHECK(m.normalized[1][1] == doctest::Approx(100.0));
  // overlap as share of B's set (column B) vs share of A's set (column A)
  CHECK(m.normalized[0][1] == doctest::Approx(100.0));
  CHECK(m.normalized[1][0] == doctest::Approx(50.0));
}

TEST_CASE("overlap matrix identical sets and empty domain") {
  auto m = overlap_matrix({{"X", {"p", "q"}}, {"Y", {"q", "p"}}});
  for (auto& row : m.normalized) {
    for (double v : row) CHECK(v == doctest::Approx(100.0));
  }

  auto e = overlap_matrix({{"X", {"p"}}, {"E", {}}});
  CHECK(e.warnings == 1);
  CHECK(std::isnan(e.normalized[0][1]));
  CHECK(e.normalized[0][0] == doctest::Approx(100.0));

  std::string csv = e.to_csv();
  CHECK(csv.find("domain,X,E") == 0);
}

TEST_CASE("overlap raw matrix symmetric on random multisets") {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::pair<std::string, std::vector<std::string>>> domains;
    size_t nd = 2 + rng.uniform(3);
    for (size_t d = 0; d < nd; ++d) {
      std::vector<std::string> phrases;
      size_t np = 1 + rng.uniform(30);
      for (size_t p = 0; p < np; ++p)
        phrases.push_back("w" + std::to_string(rng.uniform(20)));
      domains.emplace_back("d" + std::to_string(d), phrases);
    }
    auto m = overlap_matrix(domains);
    for (size_t i = 0; i < nd; ++i) {
      CHECK(m.normalized[i][i] == doctest::Approx(100.0));
      for (size_t j = 0; j < nd; ++j) CHECK(m.raw[i][j] == m.raw[j][i]);
    }
  }
}
