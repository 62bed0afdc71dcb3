#pragma once

#include <cmath>
#include <cstdint>

namespace avsi {

// All randomness in the library flows through this splitmix64 stream.  Seeds
// for sub-streams (per trial, per stage) are derived with derive_seed below,
// so results are reproducible from a single master seed regardless of how
// work is scheduled.

inline constexpr std::uint64_t kSplitMix64Gamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t splitmix64_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// index-th value of the splitmix64 stream whose state starts at `seed`.
// This is the documented derivation: derive_seed(s, i) =
// splitmix64_finalize(s + (i + 1) * 0x9E3779B97F4A7C15).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64_finalize(seed + (index + 1) * kSplitMix64Gamma);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kSplitMix64Gamma;
    return splitmix64_finalize(state_);
  }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0, n), n > 0
  int uniform_int(int n) {
    int k = static_cast<int>(uniform() * static_cast<double>(n));
    return k < n ? k : n - 1;
  }

  // Standard normal via Box-Muller; second draw of each pair is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double mu, double sigma) { return mu + sigma * normal(); }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace avsi
