#include "kpgen/kpeval/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>

#include "kpgen/common/error.hpp"

namespace kpgen::eval {

WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ConfigError("wilcoxon: paired samples differ in length");

  std::vector<double> diffs;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = b[i] - a[i];
    if (d != 0.0) diffs.push_back(d);
  }
  if (diffs.empty()) throw Error("wilcoxon: degenerate pairing (all differences zero)");
  if (diffs.size() < 5) throw Error("wilcoxon: need at least 5 non-zero differences");

  const size_t n = diffs.size();
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t x, size_t y) { return std::fabs(diffs[x]) < std::fabs(diffs[y]); });

  // Average ranks over tie groups; doubled so they stay integral.
  std::vector<uint64_t> rank2(n, 0);
  std::vector<size_t> tie_sizes;
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && std::fabs(diffs[order[j + 1]]) == std::fabs(diffs[order[i]])) ++j;
    // Positions i..j share the average of ranks i+1..j+1; doubled average
    // is i+j+2, which is always integral.
    uint64_t avg2 = static_cast<uint64_t>(i + j + 2);
    for (size_t k = i; k <= j; ++k) rank2[order[k]] = avg2;
    if (j > i) tie_sizes.push_back(j - i + 1);
    i = j + 1;
  }

  uint64_t t_plus2 = 0;  // doubled W+
  for (size_t k = 0; k < n; ++k) {
    if (diffs[k] > 0) t_plus2 += rank2[k];
  }
  const uint64_t total2 = static_cast<uint64_t>(n) * (n + 1);  // doubled rank sum
  const uint64_t w_minus2 = total2 - t_plus2;

  WilcoxonResult res;
  res.n_effective = n;
  res.w_plus = static_cast<double>(t_plus2) / 2.0;
  res.w = static_cast<double>(std::min(t_plus2, w_minus2)) / 2.0;

  if (n <= 20) {
    res.exact = true;
    // Distribution of doubled W+ over all 2^n sign assignments.
    std::vector<uint64_t> counts(total2 + 1, 0);
    counts[0] = 1;
    uint64_t reach = 0;
    for (size_t k = 0; k < n; ++k) {
      uint64_t r = rank2[k];
      for (size_t t = reach + 1; t-- > 0;) {
        if (counts[t]) counts[t + r] += counts[t];
      }
      reach += r;
    }
    // Two-sided: mass at least as far from the center as observed.
    const int64_t center2x = static_cast<int64_t>(total2);  // 2 * (doubled mean)
    const int64_t obs_dev = std::llabs(2 * static_cast<int64_t>(t_plus2) - center2x);
    uint64_t extreme = 0;
    for (uint64_t t = 0; t <= total2; ++t) {
      if (std::llabs(2 * static_cast<int64_t>(t) - center2x) >= obs_dev) extreme += counts[t];
    }
    res.p_value = static_cast<double>(extreme) / std::pow(2.0, static_cast<double>(n));
  } else {
    // Normal approximation with tie correction.
    double nn = static_cast<double>(n);
    double mean = nn * (nn + 1.0) / 4.0;
    double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0;
    for (size_t t : tie_sizes) {
      double td = static_cast<double>(t);
      var -= (td * td * td - td) / 48.0;
    }
    double w_plus = static_cast<double>(t_plus2) / 2.0;
    double z = (w_plus - mean) / std::sqrt(var);
    res.p_value = std::erfc(std::fabs(z) / std::sqrt(2.0));
  }
  res.p_value = std::min(res.p_value, 1.0);
  return res;
}

}  // namespace kpgen::eval
