#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

namespace cagen {

// Seeded random source. The mt19937_64 bit stream is fixed by the standard,
// and all distribution transforms live here, so a seed pins the exact draw
// sequence regardless of the standard library in use.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [lo, hi], both ends inclusive (Lemire reduction).
  int uniform_int(int lo, int hi) {
    const std::uint64_t range =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * range;
    auto low = static_cast<std::uint64_t>(m);
    if (low < range) {
      const std::uint64_t cutoff = (0 - range) % range;
      while (low < cutoff) {
        m = static_cast<unsigned __int128>(next_u64()) * range;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return lo + static_cast<int>(static_cast<std::uint64_t>(m >> 64));
  }

  // Box-Muller, one variate per call (the paired draw is not cached).
  double normal(double mean = 0.0, double stddev = 1.0) {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * kPi * u2);
  }

  // Fisher-Yates.
  template <typename Container>
  void shuffle(Container& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1],
                values[static_cast<std::size_t>(
                    uniform_int(0, static_cast<int>(i) - 1))]);
    }
  }

  static constexpr double kPi = 3.141592653589793238462643383279502884;

 private:
  std::mt19937_64 gen_;
};

}  // namespace cagen
