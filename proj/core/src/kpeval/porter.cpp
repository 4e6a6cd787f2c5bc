#include "kpgen/kpeval/porter.hpp"

#include <array>
#include <cstddef>

namespace kpgen::eval {

namespace {

bool is_cons(const std::string& w, size_t i) {
  switch (w[i]) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return false;
    case 'y':
      return i == 0 ? true : !is_cons(w, i - 1);
    default:
      return true;
  }
}

// Measure of w[0, n): number of VC sequences in the [C](VC)^m[V] form.
size_t measure(const std::string& w, size_t n) {
  size_t m = 0;
  size_t i = 0;
  while (i < n && is_cons(w, i)) ++i;
  while (i < n) {
    while (i < n && !is_cons(w, i)) ++i;
    if (i >= n) break;
    ++m;
    while (i < n && is_cons(w, i)) ++i;
  }
  return m;
}

bool has_vowel(const std::string& w, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    if (!is_cons(w, i)) return true;
  }
  return false;
}

bool ends_double_cons(const std::string& w, size_t n) {
  return n >= 2 && w[n - 1] == w[n - 2] && is_cons(w, n - 1);
}

// *o: stem ends consonant-vowel-consonant where the final consonant is not
// w, x or y.
bool ends_cvc(const std::string& w, size_t n) {
  if (n < 3) return false;
  if (!is_cons(w, n - 3) || is_cons(w, n - 2) || !is_cons(w, n - 1)) return false;
  char c = w[n - 1];
  return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, std::string_view suf) {
  return w.size() >= suf.size() && w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// Applies the first matching rule whose prefix measure exceeds min_measure.
// The step terminates on the first *match* whether or not the condition
// held, as in the reference implementation.
void apply_rule_list(std::string& w, const Rule* rules, size_t count, size_t min_measure) {
  for (size_t r = 0; r < count; ++r) {
    if (!ends_with(w, rules[r].suffix)) continue;
    size_t stem_len = w.size() - rules[r].suffix.size();
    if (measure(w, stem_len) > min_measure) {
      w.resize(stem_len);
      w.append(rules[r].replacement);
    }
    return;
  }
}

void step1ab(std::string& w) {
  // 1a: plurals.
  if (ends_with(w, "sses")) {
    w.resize(w.size() - 2);
  } else if (ends_with(w, "ies")) {
    w.resize(w.size() - 2);
  } else if (!ends_with(w, "ss") && ends_with(w, "s")) {
    w.resize(w.size() - 1);
  }

  // 1b: -eed / -ed / -ing.
  bool stripped = false;
  if (ends_with(w, "eed")) {
    if (measure(w, w.size() - 3) > 0) w.resize(w.size() - 1);
  } else if (ends_with(w, "ed") && has_vowel(w, w.size() - 2)) {
    w.resize(w.size() - 2);
    stripped = true;
  } else if (ends_with(w, "ing") && has_vowel(w, w.size() - 3)) {
    w.resize(w.size() - 3);
    stripped = true;
  }
  if (stripped) {
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
      w.push_back('e');
    } else if (ends_double_cons(w, w.size())) {
      char c = w.back();
      if (c != 'l' && c != 's' && c != 'z') w.resize(w.size() - 1);
    } else if (measure(w, w.size()) == 1 && ends_cvc(w, w.size())) {
      w.push_back('e');
    }
  }
}

void step1c(std::string& w) {
  if (ends_with(w, "y") && has_vowel(w, w.size() - 1)) w.back() = 'i';
}

// Longest suffix first, so nested pairs (ational/tional, ization/ation,
// ement/ment/ent) resolve the way the bucketed reference code does.
constexpr Rule kStep2[] = {
    {"ization", "ize"}, {"iveness", "ive"}, {"fulness", "ful"}, {"ousness", "ous"},
    {"ational", "ate"}, {"tional", "tion"}, {"biliti", "ble"},  {"ousli", "ous"},
    {"entli", "ent"},   {"aliti", "al"},    {"iviti", "ive"},   {"ation", "ate"},
    {"alism", "al"},    {"enci", "ence"},   {"anci", "ance"},   {"izer", "ize"},
    {"abli", "able"},   {"alli", "al"},     {"ator", "ate"},    {"eli", "e"},
};

constexpr Rule kStep3[] = {
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ness", ""},  {"ful", ""},
};

void step4(std::string& w) {
  static constexpr std::string_view kSuffixes[] = {
      "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent", "ism",
      "ate",   "iti",  "ous",  "ive",  "ize",  "ion",  "al",  "er",  "ic",  "ou",
  };
  for (auto suf : kSuffixes) {
    if (!ends_with(w, suf)) continue;
    size_t stem_len = w.size() - suf.size();
    if (suf == "ion") {
      // -ion only strips after s or t.
      if (stem_len == 0 || (w[stem_len - 1] != 's' && w[stem_len - 1] != 't')) return;
    }
    if (measure(w, stem_len) > 1) w.resize(stem_len);
    return;
  }
}

void step5(std::string& w) {
  if (ends_with(w, "e")) {
    size_t n = w.size() - 1;
    size_t m = measure(w, n);
    if (m > 1 || (m == 1 && !ends_cvc(w, n))) w.resize(n);
  }
  if (ends_with(w, "l") && ends_double_cons(w, w.size()) && measure(w, w.size()) > 1) {
    w.resize(w.size() - 1);
  }
}

}  // namespace

std::string porter_stem_once(std::string_view word) {
  std::string w(word);
  if (w.size() <= 2) return w;
  step1ab(w);
  step1c(w);
  apply_rule_list(w, kStep2, std::size(kStep2), 0);
  apply_rule_list(w, kStep3, std::size(kStep3), 0);
  step4(w);
  step5(w);
  return w;
}

std::string porter_stem(std::string_view word) {
  std::string cur(word);
  for (int i = 0; i < 8; ++i) {
    std::string next = porter_stem_once(cur);
    if (next == cur || next.empty()) break;
    cur = std::move(next);
  }
  return cur;
}

}  // namespace kpgen::eval
