#pragma once

#include <cstdint>

namespace bssc {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over the std distributions
// because its output is fully specified: traces reproduce bit-exactly on
// every platform and standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform double in [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Independent stream for (master, stream_id): the pair is hashed through
  // the generator itself, so replications can run in parallel and in any
  // order while staying reproducible.
  static SplitMix64 stream(std::uint64_t master, std::uint64_t stream_id) {
    SplitMix64 h(master);
    const std::uint64_t a = h.next();
    SplitMix64 g(a ^ (stream_id * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull));
    return SplitMix64(g.next());
  }

 private:
  std::uint64_t state_;
};

inline constexpr const char* kGeneratorName = "splitmix64";

}  // namespace bssc
