#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace kpgen {

// Deterministic 64-bit RNG (xoshiro256** seeded via splitmix64).
//
// All randomized behavior in the toolkit flows through this class so that
// runs are byte-reproducible across platforms and compilers; the standard
// <random> distributions are implementation-defined and are avoided.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0);

  uint64_t next_u64();

  // Uniform integer in [0, n). n must be > 0.
  uint64_t uniform(uint64_t n);

  // Uniform double in [0, 1).
  double uniform_real();

  bool bernoulli(double p);

  // Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    if (v.size() < 2) return;
    for (size_t i = v.size() - 1; i > 0; --i) {
      size_t j = static_cast<size_t>(uniform(i + 1));
      std::swap(v[i], v[j]);
    }
  }

  // Sample k distinct indices from [0, n), in random order.
  std::vector<size_t> sample_indices(size_t n, size_t k);

  // Derive an independent child stream, e.g. per document or per stage.
  Rng derive(std::string_view label) const;
  Rng derive(uint64_t salt) const;

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  uint64_t state_[4];
};

// Stable 64-bit mixing of (seed, label) pairs, used for stream derivation.
uint64_t mix_seed(uint64_t seed, std::string_view label);
uint64_t mix_seed(uint64_t seed, uint64_t salt);

}  // namespace kpgen
