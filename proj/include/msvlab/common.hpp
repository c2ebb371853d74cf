#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace msvlab {

// Thrown for invalid configuration / schema / precondition violations (CLI exit 1).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown for runtime failures: I/O, divergence, missing artifacts (CLI exit 2).
struct RunError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derive a child seed from a parent seed and one or more tags.
inline uint64_t mix_seed(uint64_t seed) { return splitmix64(seed); }
template <typename... Rest>
uint64_t mix_seed(uint64_t seed, uint64_t tag, Rest... rest) {
  return mix_seed(splitmix64(seed ^ (tag + 0x9e3779b97f4a7c15ULL)), rest...);
}
inline uint64_t str_tag(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

// FNV-1a over arbitrary bytes; used for config hashes.
inline uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}
std::string to_hex(uint64_t v);

// Deterministic RNG with hand-rolled value transforms so that generated
// sequences do not depend on the standard library's distribution
// implementations. Every method consumes a fixed number of engine draws.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(splitmix64(seed ^ 0x6d737635ULL)) {}

  uint64_t u64() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Inclusive range; modulo bias is negligible for the small ranges used here.
  int uniform_int(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(gen_() % span);
  }

  // Box-Muller; always consumes two engine draws.
  double normal(double mean = 0.0, double sigma = 1.0) {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * r * std::cos(2.0 * M_PI * u2);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[i], v[static_cast<size_t>(uniform_int(0, i))]);
    }
  }

  // N distinct values from [0, pool_size).
  std::vector<int> sample_without_replacement(int pool_size, int n);

 private:
  std::mt19937_64 gen_;
};

inline double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }
inline float clamp01f(float v) { return v < 0.f ? 0.f : (v > 1.f ? 1.f : v); }

}  // namespace msvlab
