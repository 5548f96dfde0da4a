#ifndef STC_RANDOM_HPP
#define STC_RANDOM_HPP

#include <cstdint>

#include "stc/rational.hpp"

namespace stc {

/// SplitMix64: tiny deterministic generator, identical streams on every
/// platform for a fixed seed (std distributions are not portable).
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    /// Rational with numerator in [-num_bound, num_bound] and denominator
    /// in [1, den_bound].
    Rational rational(long num_bound, long den_bound) {
        return Rational(range(-num_bound, num_bound), range(1, den_bound));
    }

  private:
    uint64_t state_;
};

}  // namespace stc

#endif
