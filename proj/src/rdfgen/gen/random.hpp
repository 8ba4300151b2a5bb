#ifndef RDFGEN_GEN_RANDOM_HPP
#define RDFGEN_GEN_RANDOM_HPP

#include <cstdint>
#include <random>

namespace rdfgen::gen {

/// Seeded generator with rejection-sampled uniform draws, so the same seed
/// yields the same stream on every platform and build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n must be positive.
  std::uint64_t next(std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi], inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform in [0, 1).
  double real() { return static_cast<double>(next(1ull << 53)) / static_cast<double>(1ull << 53); }

  bool coin() { return next(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rdfgen::gen

#endif
