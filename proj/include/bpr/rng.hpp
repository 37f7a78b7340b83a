#pragma once

#include <cstdint>
#include <initializer_list>

namespace bpr {

// Counter-derived random streams built on SplitMix64. Every consumer of
// randomness gets its own stream keyed by (master seed, path of ids), so
// reordering or parallelising work units never changes the draws they see.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t state) : state_(state) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe as a log() argument.
  double uniform_pos() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). Rejection sampling keeps it exact.
  int uniform_int(int n);

  // Standard normal via Box-Muller; consumes exactly two uniforms.
  double normal();

  double normal(double mean, double sd) { return mean + sd * normal(); }

 private:
  std::uint64_t state_;
};

// Stable purpose tags for stream derivation.
namespace stream {
inline constexpr std::uint64_t kTrain = 0x7261696e01ULL;
inline constexpr std::uint64_t kEpisode = 0x657069736f01ULL;
inline constexpr std::uint64_t kSelect = 0x73656c6501ULL;
inline constexpr std::uint64_t kTask = 0x7461736b01ULL;
inline constexpr std::uint64_t kOracle = 0x6f7261636cULL;
inline constexpr std::uint64_t kMap = 0x6d617001ULL;
inline constexpr std::uint64_t kSweep = 0x7377656570ULL;
inline constexpr std::uint64_t kBootstrap = 0x626f6f7401ULL;
}  // namespace stream

inline std::uint64_t mix_key(std::uint64_t h, std::uint64_t v) {
  h += 0x9e3779b97f4a7c15ULL * (v + 0x165667b19e3779f9ULL);
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

// Derives a child stream from a master seed and a path of ids.
inline SplitRng derive_stream(std::uint64_t master,
                              std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = mix_key(0x243f6a8885a308d3ULL, master);
  for (std::uint64_t v : path) h = mix_key(h, v);
  return SplitRng(h);
}

}  // namespace bpr
