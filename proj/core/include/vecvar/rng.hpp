#pragma once

#include <vecvar/rational.hpp>

#include <cstdint>
#include <random>

namespace vecvar {

// Deterministic small-integer source. mt19937_64 output is pinned by the
// C++ standard, and the reduction below avoids std::uniform_int_distribution,
// whose mapping is implementation-defined; identical seeds therefore give
// identical streams on every platform.
class SmallIntSampler {
 public:
  explicit SmallIntSampler(std::uint64_t seed, int bound = 5)
      : eng_(seed), bound_(bound) {
    if (bound < 1) throw DomainError("sampler bound must be positive");
  }

  int next() {
    return static_cast<int>(eng_() % (2 * static_cast<std::uint64_t>(bound_) + 1)) -
           bound_;
  }

  Rat next_rat() { return Rat(next()); }

  RatVector next_vector(int len) {
    RatVector v(len);
    for (int i = 0; i < len; ++i) v[i] = next_rat();
    return v;
  }

 private:
  std::mt19937_64 eng_;
  int bound_;
};

// Stable derived seed for the j-th item of a batch keyed by a small tag.
inline std::uint64_t derive_seed(std::uint64_t base, long tag, long index) {
  return base * 1000003ULL + static_cast<std::uint64_t>(tag) * 10007ULL +
         static_cast<std::uint64_t>(index);
}

}  // namespace vecvar
