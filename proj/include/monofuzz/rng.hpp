#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace monofuzz {

// Deterministic RNG used everywhere randomness is needed. std::mt19937_64 has
// a standard-mandated output sequence, but the std distributions do not, so
// the draws are hand-rolled on top of the raw engine. Identical seeds give
// identical results on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // uniform in [0, 1) with 53 bits of precision
  double uniformDouble() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in [0, bound), bound >= 1, unbiased via rejection
  std::uint64_t uniformInt(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // index drawn proportionally to non-negative weights (at least one positive)
  std::size_t categorical(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    const double u = uniformDouble() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
  }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniformInt(i));
      std::swap(values[i - 1], values[j]);
    }
  }

  // splitmix64 step; derives independent streams from a base seed
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace monofuzz
