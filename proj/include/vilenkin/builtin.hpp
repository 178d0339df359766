#pragma once

#include <cstdint>
#include <string_view>

#include "vilenkin/transform.hpp"

namespace vilenkin {

/// A test function together with the rank it is a step function of.
struct BuiltinFunction {
  GridFunction f;
  std::size_t rank;
};

/// Parses and samples one of
///   constant | character:K | indicator:RANK,CELL | random:SEED,RANK
/// `indicator` is 1 on the interval I_RANK of the points whose index is
/// congruent to CELL modulo M_RANK. `random` draws real values uniform in
/// [-1, 1) per rank-RANK interval from a splitmix64 stream.
BuiltinFunction make_function(std::string_view spec, const GroupSpec& group);

/// Complex values with real and imaginary parts uniform in [-1, 1).
GridFunction random_function(const GroupSpec& group, std::uint64_t seed);

/// Deterministic 64-bit generator; identical output on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [-1, 1).
  double symmetric() {
    return static_cast<double>(next() >> 11) * 0x1.0p-52 - 1.0;
  }

 private:
  std::uint64_t state_;
};

}  // namespace vilenkin
