#include <doctest.h>

#include "prodgaps/products.hpp"
#include "prodgaps/quotients.hpp"
#include "prodgaps/rng.hpp"
#include "prodgaps/serial.hpp"

using namespace prodgaps;

// The OpenMP kernels must agree with the serial references element for
// element, whatever the partitioning.

TEST_CASE("product_set: parallel equals serial") {
    Lcg64 rng(61);
    for (int trial = 0; trial < 12; ++trial) {
        const auto a = sample_subset(2000, 1 + rng.next_below(300), rng);
        CHECK(product_set(a) == serial::product_set(a));
    }
}

TEST_CASE("gcd_classes: parallel equals serial") {
    Lcg64 rng(62);
    for (int trial = 0; trial < 12; ++trial) {
        const auto a = sample_subset(1000, 2 + rng.next_below(250), rng);
        CHECK(gcd_classes(a) == serial::gcd_classes(a));
    }
}

TEST_CASE("quotient_set: parallel equals serial") {
    Lcg64 rng(63);
    for (int trial = 0; trial < 12; ++trial) {
        const auto a = sample_subset(800, 2 + rng.next_below(200), rng);
        CHECK(quotient_set(a) == serial::quotient_set(a));
    }
}

TEST_CASE("min_cross_block_product_gap: parallel equals serial") {
    const std::vector<BlockFamilySpec> specs = {
        theorem2_spec(Rational(1, 20)), theorem4_spec(Rational(1, 8), 2),
        theorem4_spec(Rational(1, 40), 5)};
    for (const auto& spec : specs) {
        for (long n_max = 1; n_max <= 3; ++n_max) {
            const auto seq = materialize(spec, n_max);
            CHECK(min_cross_block_product_gap(seq) == serial::min_cross_block_product_gap(seq));
        }
    }
}
