#include "prodgaps/blocks.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "prodgaps/errors.hpp"

namespace prodgaps {

const char* block_kind_name(BlockKind kind) {
    switch (kind) {
        case BlockKind::UniformBlocks: return "UniformBlocks";
        case BlockKind::SidonBlocks: return "SidonBlocks";
        case BlockKind::AllNaturals: return "AllNaturals";
    }
    return "?";
}

namespace {

void require_block_kind(const BlockFamilySpec& spec) {
    if (spec.kind == BlockKind::AllNaturals)
        throw std::invalid_argument("the all-naturals spec has no blocks to materialize");
}

}  // namespace

Integer block_max(const BlockFamilySpec& spec, long n) {
    require_block_kind(spec);
    if (n < 1) throw std::invalid_argument("block index must be >= 1");
    if (spec.kind == BlockKind::UniformBlocks) return Integer(n);
    return 2 * n * spec.m + spec.sidon.max();
}

FiniteIntegerSet block_elements(const BlockFamilySpec& spec, long n) {
    require_block_kind(spec);
    if (n < 1) throw std::invalid_argument("block index must be >= 1");
    std::vector<Integer> v;
    if (spec.kind == BlockKind::UniformBlocks) {
        for (long i = 1; i <= n; ++i) v.emplace_back(i);
    } else {
        // Translates 2km + S for k = 1..n; consecutive translates do not
        // touch because max(S) < m, so the concatenation is already sorted.
        for (long k = 1; k <= n; ++k) {
            const Integer base = 2 * k * spec.m;
            for (const auto& s : spec.sidon) v.push_back(base + s);
        }
    }
    return FiniteIntegerSet(std::move(v));
}

Integer block_offset(const BlockFamilySpec& spec, long n) {
    require_block_kind(spec);
    if (n < 1) throw std::invalid_argument("block index must be >= 1");
    Integer x = spec.x1;
    Integer prev_max = block_max(spec, 1);
    for (long i = 2; i <= n; ++i) {
        const Integer m_i = block_max(spec, i);
        const Integer reach = x + prev_max;  // previous offset + previous max
        x = spec.x1 + m_i * m_i + m_i * reach + reach * reach;
        prev_max = m_i;
    }
    return x;
}

FiniteIntegerSet MaterializedSequence::all_elements() const {
    std::vector<Integer> v;
    for (const auto& b : blocks) v.insert(v.end(), b.elements.begin(), b.elements.end());
    return FiniteIntegerSet(std::move(v));
}

MaterializedSequence materialize(const BlockFamilySpec& spec, long n_max) {
    require_block_kind(spec);
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    MaterializedSequence seq{spec, {}};
    Integer offset = spec.x1;
    Integer prev_max = 0;
    for (long n = 1; n <= n_max; ++n) {
        const Integer m_n = block_max(spec, n);
        if (n >= 2) {
            const Integer reach = offset + prev_max;
            offset = spec.x1 + m_n * m_n + m_n * reach + reach * reach;
        }
        std::vector<Integer> shifted;
        for (const auto& e : block_elements(spec, n)) shifted.push_back(offset + e);
        seq.blocks.push_back(BlockEntry{n, offset, FiniteIntegerSet(std::move(shifted))});
        prev_max = m_n;
    }
    return seq;
}

namespace {

// Smallest odd prime strictly inside (1/(8 alpha), 1/(4 alpha)), or nothing.
std::optional<Integer> prime_in_interval(const Rational& alpha) {
    const Integer& num = alpha.get_num();
    const Integer& den = alpha.get_den();
    Integer p = 3;
    while (8 * num * p <= den) p += 2;
    for (; 4 * num * p < den; p += 2)
        if (is_odd_prime(p)) return p;
    return std::nullopt;
}

BlockFamilySpec sidon_block_spec(const Rational& alpha) {
    const auto p = prime_in_interval(alpha);
    if (!p) {
        throw construction_unavailable(
            "no odd prime strictly inside (" +
            rational_str(make_rational(alpha.get_den(), 8 * alpha.get_num())) + ", " +
            rational_str(make_rational(alpha.get_den(), 4 * alpha.get_num())) + ")");
    }
    BlockFamilySpec spec;
    spec.kind = BlockKind::SidonBlocks;
    spec.p = *p;
    spec.m = 2 * (*p) * (*p);
    spec.sidon = erdos_turan_sidon(*p).elements;
    spec.x1 = 4 * (*p) * (*p) * (*p);
    spec.alpha = alpha;
    return spec;
}

}  // namespace

BlockFamilySpec theorem2_spec(const Rational& alpha) {
    if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in (0, 1)");
    if (alpha >= Rational(1, 16)) {
        BlockFamilySpec spec;
        spec.kind = BlockKind::AllNaturals;
        spec.x1 = 1;  // every gap of N*N is >= 1
        spec.alpha = alpha;
        return spec;
    }
    return sidon_block_spec(alpha);
}

BlockFamilySpec theorem4_spec(const Rational& alpha, long t) {
    if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in (0, 1)");
    if (t < 2) throw std::invalid_argument("t must be >= 2");
    const Integer t_sq = Integer(t) * Integer(t);
    if (alpha >= Rational(1, 16)) {
        BlockFamilySpec spec;
        spec.kind = BlockKind::UniformBlocks;
        spec.x1 = t_sq;
        spec.alpha = alpha;
        spec.t = t;
        return spec;
    }
    BlockFamilySpec spec = sidon_block_spec(alpha);
    spec.x1 = t_sq * spec.p * spec.p * spec.p * spec.p;
    spec.t = t;
    return spec;
}

namespace {

struct TaggedProduct {
    Integer value;
    long block;  // -1 for a mixed pair
};

void check_quadruple_guard(const MaterializedSequence& seq) {
    unsigned long long n = 0;
    for (const auto& b : seq.blocks) n += b.elements.size();
    const unsigned long long pairs = n * (n + 1) / 2;
    // pairs^2 quadruple evaluations; 10^4 pairs saturate the 10^8 guard
    if (pairs > 10'000)
        throw enumeration_too_large("quadruple enumeration would exceed the 10^8 guard; "
                                    "materialize fewer blocks");
}

std::vector<TaggedProduct> tagged_pair_products(const MaterializedSequence& seq) {
    std::vector<std::pair<Integer, long>> elems;
    for (const auto& b : seq.blocks)
        for (const auto& e : b.elements) elems.emplace_back(e, b.index);
    std::vector<TaggedProduct> out;
    out.reserve(elems.size() * (elems.size() + 1) / 2);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i; j < elems.size(); ++j)
            out.push_back({elems[i].first * elems[j].first,
                           elems[i].second == elems[j].second ? elems[i].second : -1});
    return out;
}

}  // namespace

std::optional<Integer> min_cross_block_product_gap(const MaterializedSequence& seq) {
    check_quadruple_guard(seq);
    const auto prods = tagged_pair_products(seq);

    const long n = static_cast<long>(prods.size());
    std::optional<Integer> best;

#ifdef _OPENMP
    const int workers = omp_get_max_threads();
#else
    const int workers = 1;
#endif
    std::vector<std::optional<Integer>> local(workers);

#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) {
#ifdef _OPENMP
        auto& mine = local[omp_get_thread_num()];
#else
        auto& mine = local[0];
#endif
        for (long j = i + 1; j < n; ++j) {
            if (prods[i].block >= 0 && prods[i].block == prods[j].block)
                continue;  // all four factors in one block
            Integer d = abs(prods[i].value - prods[j].value);
            if (d == 0) continue;
            if (!mine || d < *mine) mine = std::move(d);
        }
    }
    for (auto& m : local)
        if (m && (!best || *m < *best)) best = std::move(*m);
    return best;
}

namespace serial {

std::optional<Integer> min_cross_block_product_gap(const MaterializedSequence& seq) {
    check_quadruple_guard(seq);
    const auto prods = tagged_pair_products(seq);
    std::optional<Integer> best;
    for (std::size_t i = 0; i < prods.size(); ++i) {
        for (std::size_t j = i + 1; j < prods.size(); ++j) {
            if (prods[i].block >= 0 && prods[i].block == prods[j].block) continue;
            Integer d = abs(prods[i].value - prods[j].value);
            if (d != 0 && (!best || d < *best)) best = std::move(d);
        }
    }
    return best;
}

}  // namespace serial

}  // namespace prodgaps
