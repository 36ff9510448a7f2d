#pragma once

// Straight-line serial reference implementations of the parallel kernels.
// Tests assert bit-identical results against the OpenMP versions and the
// benchmark tool compares their throughput.

#include <optional>
#include <vector>

#include "prodgaps/blocks.hpp"
#include "prodgaps/integer_set.hpp"
#include "prodgaps/quotients.hpp"

namespace prodgaps::serial {

FiniteIntegerSet product_set(const FiniteIntegerSet& a);

std::optional<Integer> min_cross_block_product_gap(const MaterializedSequence& seq);

GcdClassTable gcd_classes(const FiniteIntegerSet& a);

std::vector<Rational> quotient_set(const FiniteIntegerSet& a);

}  // namespace prodgaps::serial
