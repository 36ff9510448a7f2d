#pragma once

#include <map>
#include <vector>

#include "prodgaps/integer_set.hpp"

namespace prodgaps {

// Distinct reduced fractions a/a' over pairs a < a' from the set; all lie in
// (0, 1). Needs >= 2 elements. OpenMP-parallel; serial reference in
// serial.hpp.
std::vector<Rational> quotient_set(const FiniteIntegerSet& a);

// A reduced fraction together with the first element pair (num_elem < den_elem)
// of the set producing it.
struct QuotientWitness {
    Rational fraction;
    Integer num_elem;
    Integer den_elem;
};

std::vector<QuotientWitness> quotient_set_with_witnesses(const FiniteIntegerSet& a);

// d -> number of pairs a < a' with gcd(a, a') = d.
using GcdClassTable = std::map<Integer, Integer>;

GcdClassTable gcd_classes(const FiniteIntegerSet& a);

// The quotient-set lower bound at its proof constants: T = ceil(2/alpha^2),
// some d <= T has class size >= N^2 (alpha^2/T - 1/T^2) >= alpha^4 N^2 / 9,
// and |A/A| dominates every class.
struct Theorem5Report {
    Rational alpha;   // |A| / N, exact
    Integer t_cap;    // T
    Integer best_d;   // argmax over d <= T of class size (smallest on ties)
    Integer class_size;
    Integer quotient_size;
    Rational bound;              // alpha^4 N^2 / 9
    Rational intermediate_bound; // N^2 (alpha^2/T - 1/T^2)
    bool pass = false;
};

// Requires A inside [1, N] with >= 2 elements. pass = false is a
// falsification event (an implementation bug, never a true counterexample).
Theorem5Report theorem5_check(const FiniteIntegerSet& a, const Integer& n_cap);

// The closest adjacent pair among the sorted quotients, with element-pair
// witnesses from A and the induced small product gap |a*a''' - a'*a''|.
struct CloseQuotientPair {
    Rational alpha;
    Rational low, high;               // adjacent fractions, low < high
    Integer low_num, low_den;         // low = low_num/low_den with both in A
    Integer high_num, high_den;
    Rational distance;                // high - low
    Rational distance_bound;          // 9 / (alpha^4 N^2)
    Integer product_gap;              // |low_num*high_den - low_den*high_num|
    Rational gap_bound;               // 9 / alpha^4
    bool bounds_hold = false;
};

// Requires the theorem5 preconditions plus alpha^4 N^2 / 9 > 1.
CloseQuotientPair close_quotients(const FiniteIntegerSet& a, const Integer& n_cap);

}  // namespace prodgaps
