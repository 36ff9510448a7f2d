#pragma once

#include <optional>
#include <vector>

#include "prodgaps/blocks.hpp"
#include "prodgaps/integer_set.hpp"

namespace prodgaps {

// Sorted distinct products landing in a window, with gap statistics.
struct GapReport {
    Window window;
    std::vector<Integer> values;

    std::vector<Integer> gaps() const;              // values[i+1] - values[i]
    std::vector<Integer> t_gaps(long t) const;      // values[i+t] - values[i]
    std::optional<Integer> min_gap() const;
    std::optional<Integer> min_t_gap(long t) const;
};

// Sorted distinct {a*a' : a, a' in A} (unordered pairs, repetition allowed).
// OpenMP-parallel; serial reference in serial.hpp.
FiniteIntegerSet product_set(const FiniteIntegerSet& a);

// All distinct pair products inside w. Requires w.lo >= 1.
GapReport products_in_window(const FiniteIntegerSet& a, const Window& w);

// Same over a block sequence; block pairs whose product range misses w are
// skipped entirely, which is what makes far windows cheap.
GapReport products_in_window(const MaterializedSequence& seq, const Window& w);

// Exact minimum of values[n+t] - values[n] over the full product set.
Integer min_gap_oracle(const FiniteIntegerSet& a, long t);

}  // namespace prodgaps
