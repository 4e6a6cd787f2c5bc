#include <doctest.h>

#include <string>
#include <vector>

#include "kpgen/common/error.hpp"
#include "kpgen/common/rng.hpp"
#include "kpgen/instancegen/one2seq.hpp"

using namespace kpgen;
using namespace kpgen::instance;

namespace {

std::vector<std::string> random_phrase_list(Rng& rng) {
  static const char alpha[] = "abcdefghijklmnopqrstuvwxyz0123456789";
  size_t n = rng.uniform(6);
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) {
    size_t toks = 1 + rng.uniform(4);
    std::string p;
    for (size_t t = 0; t < toks; ++t) {
      if (t) p += ' ';
      size_t len = 1 + rng.uniform(7);
      for (size_t c = 0; c < len; ++c) p += alpha[rng.uniform(36)];
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("serialize follows the bos/sep/eos grammar") {
  CHECK(serialize_one2seq({"supervised learning", "beam search"}) ==
        "<bos> supervised learning <sep> beam search <eos>");
  CHECK(serialize_one2seq({}) == "<bos> <eos>");
  auto parsed = parse_one2seq("<bos> <eos>");
  CHECK(parsed.phrases.empty());
  CHECK(!parsed.truncated);
}

TEST_CASE("serialize rejects control tokens and empty phrases") {
  CHECK_THROWS_AS(serialize_one2seq({"good", "has <sep> inside"}), Error);
  CHECK_THROWS_AS(serialize_one2seq({"   "}), Error);
}

TEST_CASE("parse handles truncation by keeping complete phrases") {
  auto r = parse_one2seq("<bos> alpha beta <sep> gamma");
  CHECK(r.truncated);
  REQUIRE(r.phrases.size() == 1);
  CHECK(r.phrases[0] == "alpha beta");

  auto r2 = parse_one2seq("<bos> alpha <sep> beta <eos>");
  CHECK(!r2.truncated);
  CHECK(r2.phrases == std::vector<std::string>{"alpha", "beta"});

  CHECK_THROWS_AS(parse_one2seq("alpha <sep> beta <eos>"), DataError);
  CHECK_THROWS_AS(parse_one2seq(""), DataError);
}

TEST_CASE("one2seq round-trip identity over randomized phrase lists") {
  Rng rng(4242);
  for (int i = 0; i < 1000; ++i) {
    auto phrases = random_phrase_list(rng);
    auto parsed = parse_one2seq(serialize_one2seq(phrases));
    CHECK(!parsed.truncated);
    CHECK(parsed.phrases == phrases);
  }
}

TEST_CASE("header builds and parses back to identical counts") {
  GroupCounts c{3, 2, 1};
  std::string h = build_header(c);
  CHECK(h == "<header> present 3 absent 2 infill 1 </header>");
  size_t off = 0;
  CHECK(parse_header(h + " body text", &off) == c);
  CHECK(off == h.size() + 1);

  CHECK(build_header({0, 0, 0}) == "<header> present 0 absent 0 infill 0 </header>");
  CHECK(parse_header(build_header({0, 0, 0})) == GroupCounts{0, 0, 0});
  CHECK_THROWS_AS(parse_header("no header here at all or too short"), DataError);
}

TEST_CASE("control token detection") {
  CHECK(is_control_token("<bos>"));
  CHECK(is_control_token("[MASK]"));
  CHECK(!is_control_token("bos"));
  CHECK(contains_control_token("text with <eos> inside"));
  CHECK(!contains_control_token("clean text"));
}
