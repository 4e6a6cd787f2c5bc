#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "kpgen/common/error.hpp"
#include "kpgen/common/rng.hpp"
#include "kpgen/kpeval/wilcoxon.hpp"

using namespace kpgen;
using namespace kpgen::eval;

namespace {

// Exhaustive sign-enumeration oracle, independent of the DP implementation:
// walks every sign assignment by bitmask and recomputes W+ from scratch.
double oracle_two_sided_p(const std::vector<double>& diffs) {
  size_t n = diffs.size();
  // average ranks of |d|, doubled to stay integral
  std::vector<double> absd;
  for (double d : diffs) absd.push_back(std::fabs(d));
  std::vector<uint64_t> rank2(n);
  for (size_t i = 0; i < n; ++i) {
    size_t less = 0, equal = 0;
    for (size_t j = 0; j < n; ++j) {
      if (absd[j] < absd[i]) ++less;
      if (absd[j] == absd[i]) ++equal;
    }
    // ranks less+1 .. less+equal averaged, doubled
    rank2[i] = 2 * less + equal + 1;
  }
  uint64_t total2 = 0;
  for (auto r : rank2) total2 += r;

  uint64_t obs2 = 0;
  for (size_t i = 0; i < n; ++i) {
    if (diffs[i] > 0) obs2 += rank2[i];
  }
  int64_t obs_dev = std::llabs(2 * static_cast<int64_t>(obs2) - static_cast<int64_t>(total2));

  uint64_t extreme = 0;
  for (uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    uint64_t w2 = 0;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (1ULL << i)) w2 += rank2[i];
    }
    int64_t dev = std::llabs(2 * static_cast<int64_t>(w2) - static_cast<int64_t>(total2));
    if (dev >= obs_dev) ++extreme;
  }
  return static_cast<double>(extreme) / std::pow(2.0, static_cast<double>(n));
}

}  // namespace

TEST_CASE("wilcoxon constant shift gives minimal W and doubled extreme tail") {
  std::vector<double> a, b;
  for (int i = 0; i < 10; ++i) {
    a.push_back(i * 1.37);
    b.push_back(i * 1.37 + 2.0);
  }
  auto res = wilcoxon_signed_rank(a, b);
  CHECK(res.exact);
  CHECK(res.n_effective == 10);
  CHECK(res.w == doctest::Approx(0.0));
  // both all-positive and all-negative assignments are as extreme
  CHECK(res.p_value == doctest::Approx(2.0 / 1024.0).epsilon(1e-12));
}

TEST_CASE("wilcoxon symmetric differences give p of 1") {
  std::vector<double> a = {0, 0, 0, 0, 0, 0};
  std::vector<double> b = {1, -1, 2, -2, 3, -3};
  auto res = wilcoxon_signed_rank(a, b);
  CHECK(res.exact);
  // W+ sits exactly at the distribution midpoint
  CHECK(res.w_plus == doctest::Approx(6.0 * 7.0 / 4.0));
  CHECK(res.p_value == doctest::Approx(1.0));
}

TEST_CASE("wilcoxon degenerate and short inputs") {
  std::vector<double> a = {1, 2, 3, 4, 5};
  CHECK_THROWS_AS(wilcoxon_signed_rank(a, a), Error);
  std::vector<double> b = {1, 2, 3, 4, 6};  // one non-zero difference
  CHECK_THROWS_AS(wilcoxon_signed_rank(a, b), Error);
  CHECK_THROWS_AS(wilcoxon_signed_rank({1, 2}, {3}), Error);
}

TEST_CASE("wilcoxon exact p matches exhaustive enumeration for n 5..12") {
  Rng rng(123);
  for (size_t n = 5; n <= 12; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<double> a(n), b(n);
      std::vector<double> diffs(n);
      for (size_t i = 0; i < n; ++i) {
        // integer-valued so b - a reproduces the difference exactly and
        // tie groups are identical on both sides
        a[i] = static_cast<double>(rng.uniform(20));
        double mag = 1.0 + static_cast<double>(rng.uniform(4));
        double sign = rng.bernoulli(0.5) ? 1.0 : -1.0;
        diffs[i] = sign * mag;
        b[i] = a[i] + diffs[i];
      }
      auto res = wilcoxon_signed_rank(a, b);
      REQUIRE(res.exact);
      double want = oracle_two_sided_p(diffs);
      CAPTURE(n);
      CAPTURE(trial);
      CHECK(std::fabs(res.p_value - want) < 1e-12);
    }
  }
}

TEST_CASE("wilcoxon normal approximation is close to exact near the cutoff") {
  Rng rng(321);
  // n = 21 uses the approximation; compare against the enumeration oracle
  size_t n = 21;
  std::vector<double> a(n), b(n), diffs(n);
  for (size_t i = 0; i < n; ++i) {
    a[i] = static_cast<double>(i);  // integer-valued, exact differences
    double sign = rng.bernoulli(0.4) ? 1.0 : -1.0;
    diffs[i] = sign * (1.0 + static_cast<double>(rng.uniform(6)));
    b[i] = a[i] + diffs[i];
  }
  auto res = wilcoxon_signed_rank(a, b);
  CHECK(!res.exact);
  CHECK(res.p_value > 0.0);
  CHECK(res.p_value <= 1.0);
  double want = oracle_two_sided_p(diffs);
  CHECK(std::fabs(res.p_value - want) < 0.05);
}
