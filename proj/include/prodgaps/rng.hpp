#pragma once

#include <cstdint>
#include <vector>

#include "prodgaps/integer_set.hpp"

namespace prodgaps {

// 64-bit linear congruential generator (Knuth's MMIX multiplier), fixed here
// so that seeds are portable across implementations:
//
//   state <- 6364136223846793005 * state + 1442695040888963407  (mod 2^64)
//
// next() advances first, then returns the new state.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    // Uniform-ish draw in [0, n); plain modulo, documented as part of the
    // portable generator contract.
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

// Seeded shuffle-prefix sample: Fisher-Yates over {1,...,n} driven by the
// generator above (for i = n-1 down to 1: swap positions i and next_below(i+1)),
// then the first m entries, sorted.
FiniteIntegerSet sample_subset(std::uint64_t n, std::uint64_t m, Lcg64& rng);

}  // namespace prodgaps
