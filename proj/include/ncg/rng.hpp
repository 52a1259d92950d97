#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ncg {

// splitmix64 finalizer, used to derive per-run seeds from a base seed.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic seed for one run of one sweep cell.
inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t scenario_id,
                                 std::uint64_t alpha_index, std::uint64_t run_index) {
  std::uint64_t s = mix64(base_seed ^ mix64(scenario_id + 1));
  s = mix64(s ^ mix64(alpha_index + 1));
  return mix64(s ^ mix64(run_index + 1));
}

// Single random stream for a simulation run. The generator is mt19937_64,
// whose output sequence is pinned by the standard; bounded draws use
// rejection sampling instead of std distributions so that identical seeds
// replay identical runs on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Unbiased draw from [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t x = gen_();
      if (x >= threshold) return x % bound;
    }
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  bool coin() { return below(2) == 1; }

  // Fisher-Yates, one below() draw per position from the back.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ncg
