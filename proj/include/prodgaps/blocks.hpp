#pragma once

#include <optional>
#include <vector>

#include "prodgaps/integer_set.hpp"
#include "prodgaps/sidon.hpp"

namespace prodgaps {

// Block-structured sequences: the union over n of offset_n + block_n, where
// the offsets obey
//
//   offset_n = x1 + M_n^2 + M_n*(offset_{n-1} + M_{n-1}) + (offset_{n-1} + M_{n-1})^2
//
// with M_n the largest element of block_n. The quadratic growth forces
// products of elements from different blocks at least x1 apart.
enum class BlockKind {
    UniformBlocks,  // block_n = {1, ..., n}
    SidonBlocks,    // block_n = union over k=1..n of (2km + S), m = 2p^2
    AllNaturals,    // degenerate flag: the sequence is all of N, no blocks
};

struct BlockFamilySpec {
    BlockKind kind;
    Integer x1;

    // SidonBlocks only.
    Integer p;
    Integer m;  // 2p^2
    FiniteIntegerSet sidon;

    // Provenance of the construction, when built from a density target.
    std::optional<Rational> alpha;
    std::optional<long> t;
};

const char* block_kind_name(BlockKind kind);

// M_n, the largest element of block n.
Integer block_max(const BlockFamilySpec& spec, long n);

// Block n itself (before shifting by the offset).
FiniteIntegerSet block_elements(const BlockFamilySpec& spec, long n);

// offset_n: x1 for n = 1, then the recurrence, computed exactly.
Integer block_offset(const BlockFamilySpec& spec, long n);

struct BlockEntry {
    long index;
    Integer offset;
    FiniteIntegerSet elements;  // offset + block
};

struct MaterializedSequence {
    BlockFamilySpec spec;
    std::vector<BlockEntry> blocks;

    FiniteIntegerSet all_elements() const;
};

// Blocks 1..n_max, each shifted by its offset. AllNaturals specs cannot be
// materialized.
MaterializedSequence materialize(const BlockFamilySpec& spec, long n_max);

// The sparse-product construction for a density target alpha: AllNaturals for
// alpha >= 1/16, otherwise Sidon blocks over the smallest odd prime p with
// 1/(8 alpha) < p < 1/(4 alpha), m = 2p^2, x1 = 4p^3.
BlockFamilySpec theorem2_spec(const Rational& alpha);

// The t-gap variant: uniform blocks with x1 = t^2 for alpha >= 1/16,
// otherwise the theorem2 blocks with x1 = t^2 p^4. Requires t >= 2.
BlockFamilySpec theorem4_spec(const Rational& alpha, long t);

// Exhaustive scan over quadruples (c1,c2,c3,c4) from the union with not all
// four in one block; returns the minimum nonzero |c1*c2 - c3*c4|, or nullopt
// when no quadruple qualifies (single block). Guarded at 10^8 quadruple
// evaluations. OpenMP-parallel; see serial.hpp for the reference version.
std::optional<Integer> min_cross_block_product_gap(const MaterializedSequence& seq);

inline constexpr unsigned long long kQuadrupleGuard = 100'000'000ULL;

}  // namespace prodgaps
