#include <doctest.h>

#include "oracles.hpp"
#include "prodgaps/rng.hpp"
#include "prodgaps/sidon.hpp"

using namespace prodgaps;

TEST_CASE("erdos_turan_sidon small primes") {
    CHECK(erdos_turan_sidon(3).elements == FiniteIntegerSet(std::vector<Integer>{0, 7, 13}));
    CHECK(erdos_turan_sidon(5).elements ==
          FiniteIntegerSet(std::vector<Integer>{0, 11, 24, 34, 41}));
    CHECK_THROWS_AS(erdos_turan_sidon(4), std::invalid_argument);
    CHECK_THROWS_AS(erdos_turan_sidon(2), std::invalid_argument);
    CHECK_THROWS_AS(erdos_turan_sidon(9), std::invalid_argument);
}

TEST_CASE("verify_sidon verdicts") {
    CHECK(verify_sidon(FiniteIntegerSet(std::vector<Integer>{0, 1, 3})).valid);

    const auto bad = verify_sidon(FiniteIntegerSet(std::vector<Integer>{0, 1, 2, 3}));
    REQUIRE(!bad.valid);
    // The returned quadruple must be a genuine violation.
    const auto& w = bad.witness;
    CHECK(w[0] + w[1] == w[2] + w[3]);
    CHECK(!(std::min(w[0], w[1]) == std::min(w[2], w[3]) &&
            std::max(w[0], w[1]) == std::max(w[2], w[3])));

    CHECK(verify_sidon(erdos_turan_sidon(47).elements).valid);
    CHECK(verify_sidon(FiniteIntegerSet{}).valid);
}

TEST_CASE("verify_sidon agrees with the distinct-sum-count oracle") {
    Lcg64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const auto set = sample_subset(40, rng.next_below(12), rng);
        CHECK(verify_sidon(set).valid == oracles::sidon_by_sum_count(set));
    }
}

TEST_CASE("min_pairwise_gap") {
    CHECK(min_pairwise_gap(FiniteIntegerSet(std::vector<Integer>{0, 7, 13})) == 6);
    CHECK(min_pairwise_gap(FiniteIntegerSet(std::vector<Integer>{0, 11, 24, 34, 41})) == 7);
    CHECK(min_pairwise_gap(FiniteIntegerSet(std::vector<Integer>{5, 6})) == 1);
    CHECK_THROWS_AS(min_pairwise_gap(FiniteIntegerSet(std::vector<Integer>{5})),
                    std::invalid_argument);
}

TEST_CASE("construction satisfies both claims for every odd prime up to 97") {
    for (long p = 3; p <= 97; p += 2) {
        if (!is_odd_prime(p)) continue;
        const auto s = erdos_turan_sidon(p);
        CHECK(s.elements.size() == static_cast<std::size_t>(p));
        CHECK(s.elements.min() >= 0);
        CHECK(s.elements.max() < 2 * Integer(p) * Integer(p));
        CHECK(verify_sidon(s.elements).valid);
        CHECK(min_pairwise_gap(s.elements) >= p);
    }
}
