#pragma once

#include <array>

#include "prodgaps/integer_set.hpp"

namespace prodgaps {

// p points of the Erdos-Turan construction inside [0, 2p^2), all pairwise
// sums distinct and consecutive elements at least p apart.
struct SidonSet {
    Integer p;
    FiniteIntegerSet elements;
};

struct SidonCheck {
    bool valid = true;
    // When invalid: s_i + s_j = s_k + s_l with {s_i,s_j} != {s_k,s_l}.
    std::array<Integer, 4> witness{};
};

bool is_odd_prime(const Integer& p);

// {2pi + (i^2 mod p) : 0 <= i <= p-1}; throws std::invalid_argument unless p
// is an odd prime.
SidonSet erdos_turan_sidon(const Integer& p);

// All sums of unordered pairs (repetition allowed) distinct?
SidonCheck verify_sidon(const FiniteIntegerSet& set);

// Minimum difference of consecutive sorted elements; needs >= 2 elements.
Integer min_pairwise_gap(const FiniteIntegerSet& set);

}  // namespace prodgaps
