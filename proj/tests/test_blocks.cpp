#include <doctest.h>

#include "oracles.hpp"
#include "prodgaps/blocks.hpp"
#include "prodgaps/errors.hpp"

using namespace prodgaps;

namespace {

BlockFamilySpec uniform_spec(long x1) {
    BlockFamilySpec spec;
    spec.kind = BlockKind::UniformBlocks;
    spec.x1 = x1;
    return spec;
}

}  // namespace

TEST_CASE("offset recurrence by hand: 4, 43, 2173") {
    const auto spec = uniform_spec(4);
    CHECK(block_offset(spec, 1) == 4);
    CHECK(block_offset(spec, 2) == 43);    // 4 + 2^2 + 2*(4+1) + (4+1)^2
    CHECK(block_offset(spec, 3) == 2173);  // 4 + 9 + 3*45 + 45^2
}

TEST_CASE("materialize examples") {
    const auto thm2 = theorem2_spec(Rational(1, 20));
    REQUIRE(thm2.kind == BlockKind::SidonBlocks);
    const auto seq1 = materialize(thm2, 1);
    CHECK(seq1.blocks[0].elements == FiniteIntegerSet(std::vector<Integer>{144, 151, 157}));

    const auto uni = materialize(uniform_spec(4), 2);
    CHECK(uni.blocks[0].elements == FiniteIntegerSet(std::vector<Integer>{5}));
    CHECK(uni.blocks[1].elements == FiniteIntegerSet(std::vector<Integer>{44, 45}));

    CHECK(materialize(uniform_spec(9), 1).blocks.size() == 1);
    CHECK_THROWS_AS(materialize(uniform_spec(4), 0), std::invalid_argument);
}

TEST_CASE("theorem2_spec picks the smallest odd prime in the open interval") {
    const auto spec = theorem2_spec(Rational(1, 20));  // interval (2.5, 5)
    CHECK(spec.p == 3);
    CHECK(spec.m == 18);
    CHECK(spec.x1 == 108);
    CHECK(spec.sidon == FiniteIntegerSet(std::vector<Integer>{0, 7, 13}));

    CHECK(theorem2_spec(Rational(1, 16)).kind == BlockKind::AllNaturals);
    CHECK(theorem2_spec(Rational(1, 8)).kind == BlockKind::AllNaturals);

    // interval (12.5, 25): primes 13, 17, 19, 23; the smallest wins
    const auto wide = theorem2_spec(Rational(1, 100));
    CHECK(wide.p == 13);
    CHECK(wide.x1 == 4 * 13 * 13 * 13);
    CHECK(wide.p == *oracles::naive_prime_pick(Rational(1, 100)));

    // 1/12 is already above the 1/16 threshold, so no prime is needed
    CHECK(theorem2_spec(Rational(1, 12)).kind == BlockKind::AllNaturals);
    CHECK_THROWS_AS(theorem2_spec(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(theorem2_spec(Rational(1)), std::invalid_argument);
}

TEST_CASE("theorem2_spec prime choice matches the brute scan on odd alphas") {
    for (long den = 17; den <= 400; den += 13) {
        const Rational alpha(1, den);
        try {
            const auto spec = theorem2_spec(alpha);
            if (spec.kind != BlockKind::SidonBlocks) continue;
            CHECK(spec.p == *oracles::naive_prime_pick(alpha));
        } catch (const construction_unavailable&) {
            CHECK(!oracles::naive_prime_pick(alpha));
        }
    }
}

TEST_CASE("theorem4_spec examples") {
    const auto uni = theorem4_spec(Rational(1, 8), 2);
    CHECK(uni.kind == BlockKind::UniformBlocks);
    CHECK(uni.x1 == 4);

    const auto sid = theorem4_spec(Rational(1, 20), 3);
    CHECK(sid.kind == BlockKind::SidonBlocks);
    CHECK(sid.p == 3);
    CHECK(sid.x1 == 729);  // t^2 p^4 = 9 * 81

    CHECK_THROWS_AS(theorem4_spec(Rational(1, 8), 1), std::invalid_argument);
}

TEST_CASE("recurrence residual is zero for all materialized blocks, both kinds") {
    for (const auto& spec : {theorem4_spec(Rational(1, 8), 2), theorem2_spec(Rational(1, 20))}) {
        const auto seq = materialize(spec, 8);
        for (std::size_t i = 1; i < seq.blocks.size(); ++i) {
            const Integer m_n = block_max(spec, seq.blocks[i].index);
            const Integer reach = seq.blocks[i - 1].offset + block_max(spec, seq.blocks[i - 1].index);
            const Integer residual = seq.blocks[i].offset - spec.x1 - m_n * m_n - m_n * reach -
                                     reach * reach;
            CHECK(residual == 0);
        }
    }
}

TEST_CASE("blocks are disjoint and increasing") {
    const auto seq = materialize(theorem2_spec(Rational(1, 20)), 5);
    for (std::size_t i = 1; i < seq.blocks.size(); ++i)
        CHECK(seq.blocks[i].elements.min() > seq.blocks[i - 1].elements.max());
}

TEST_CASE("offsets outgrow the square of the previous reach") {
    const auto spec = uniform_spec(2);
    for (long n = 2; n <= 8; ++n) {
        const Integer reach = block_offset(spec, n - 1) + block_max(spec, n - 1);
        CHECK(block_offset(spec, n) > reach * reach);
    }
}

TEST_CASE("sidon-block density witness: |A_n| / (2mn) >= 1/(4p) for n <= 20") {
    const auto spec = theorem2_spec(Rational(1, 20));
    for (long n = 1; n <= 20; ++n) {
        const auto a_n = block_elements(spec, n);
        CHECK(Integer(a_n.size()) == Integer(n) * spec.p);
        CHECK(make_rational(Integer(a_n.size()), 2 * spec.m * n) >= Rational(1, 4) / Rational(spec.p));
        CHECK(a_n.max() == block_max(spec, n));
    }
}

TEST_CASE("cross-block separation: uniform x1=4, two blocks") {
    const auto seq = materialize(uniform_spec(4), 2);  // {5}, {44, 45}
    const auto got = min_cross_block_product_gap(seq);
    REQUIRE(got.has_value());
    CHECK(*got >= 4);
    CHECK(got == oracles::naive_cross_block_min(seq));
    CHECK(*got == 5);  // |44*45 - 45*45| would be same-block; 5 = |220 - 225|
}

TEST_CASE("cross-block separation: single block has no qualifying quadruple") {
    CHECK(!min_cross_block_product_gap(materialize(uniform_spec(4), 1)).has_value());
}

TEST_CASE("cross-block separation: theorem2 spec at p=3 stays above x1=108") {
    const auto seq = materialize(theorem2_spec(Rational(1, 20)), 2);
    const auto got = min_cross_block_product_gap(seq);
    REQUIRE(got.has_value());
    CHECK(*got >= 108);
    CHECK(got == oracles::naive_cross_block_min(seq));
}

TEST_CASE("lemma-A floor holds for every constructed spec at n_max <= 3") {
    const std::vector<BlockFamilySpec> specs = {
        theorem2_spec(Rational(1, 20)), theorem4_spec(Rational(1, 8), 2),
        theorem4_spec(Rational(1, 20), 3), theorem4_spec(Rational(1, 5), 4)};
    for (const auto& spec : specs) {
        for (long n_max = 2; n_max <= 3; ++n_max) {
            const auto gap = min_cross_block_product_gap(materialize(spec, n_max));
            REQUIRE(gap.has_value());
            CHECK(*gap >= spec.x1);
        }
    }
}

TEST_CASE("quadruple guard rejects oversized enumerations") {
    // 600 elements -> ~180k pairs -> ~3.2e10 quadruples, past the guard.
    BlockFamilySpec spec;
    spec.kind = BlockKind::SidonBlocks;
    spec.p = 199;
    spec.m = 2 * Integer(199) * Integer(199);
    spec.sidon = erdos_turan_sidon(199).elements;
    spec.x1 = 4 * Integer(199) * Integer(199) * Integer(199);
    const auto seq = materialize(spec, 3);  // 3p + ... = 199*6 elements total
    CHECK_THROWS_AS(min_cross_block_product_gap(seq), enumeration_too_large);
}

TEST_CASE("all-naturals spec cannot be materialized") {
    CHECK_THROWS_AS(materialize(theorem2_spec(Rational(1, 8)), 2), std::invalid_argument);
}
