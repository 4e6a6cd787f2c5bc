#pragma once

#include <cstddef>
#include <vector>

namespace kpgen::eval {

struct WilcoxonResult {
  double w = 0.0;         // min(W+, W-), the classic test statistic
  double w_plus = 0.0;    // sum of ranks of positive differences (b - a)
  double p_value = 1.0;   // two-sided
  size_t n_effective = 0; // pairs remaining after dropping zero differences
  bool exact = false;     // exact sign-permutation distribution used
};

// Paired two-sided Wilcoxon signed-rank test on differences b[i] - a[i].
// Zero differences are dropped; ties in |d| get average ranks. Exact
// permutation p-value when n_effective <= 20, otherwise the normal
// approximation with tie correction. Throws Error when all differences are
// zero ("degenerate pairing") or fewer than 5 effective pairs remain.
WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace kpgen::eval
