#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace editgrpo {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// mt19937_64 engine with hand-rolled draws. The std:: distributions are
// implementation-defined, so every draw here is pinned byte-for-byte to keep
// run logs reproducible across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(splitmix64(seed)) {}

  // Independent stream addressed by (seed, path). Streams for different paths
  // do not interact, which keeps parallel rollouts bit-identical to serial.
  static Rng derive(uint64_t seed, std::initializer_list<uint64_t> path) {
    uint64_t h = splitmix64(seed);
    for (uint64_t v : path) {
      h = splitmix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
    }
    return Rng(h);
  }

  uint64_t u64() { return eng_(); }

  // uniform integer in [0, n); n = 0 or 1 returns 0
  uint64_t below(uint64_t n) { return n <= 1 ? 0 : eng_() % n; }

  // uniform real in [0, 1)
  double real() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double gaussian() {
    // Box-Muller without spare caching so the draw count stays predictable
    double u1 = real();
    double u2 = real();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925287 * u2);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace editgrpo
