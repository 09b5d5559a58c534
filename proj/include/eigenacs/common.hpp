#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace eigenacs {

// Invalid user-supplied configuration (bad dimensions, unknown names, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values or a solve that cannot proceed.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The mu-update direction lies in the null space of the carrier term.
struct DegenerateDirection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mixes a master seed with stream tags so that independent consumers
// (basis draws, per-strand collocation, reference retries, ...) never
// share a generator state. splitmix64 finalizer.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return mix_seed(mix_seed(seed, a), b);
}

// Deterministic uniform stream. std::mt19937_64 output is fully specified
// by the standard; the [0,1) mapping is done by hand so draws are
// bit-identical across platforms (distributions are not portable).
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : engine_(seed) {}

  double unit() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double symmetric(double half_width) {  // [-h, h)
    return half_width * (2.0 * unit() - 1.0);
  }

  double in_range(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace eigenacs
