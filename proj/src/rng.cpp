#include "prodgaps/rng.hpp"

#include <numeric>
#include <stdexcept>

namespace prodgaps {

FiniteIntegerSet sample_subset(std::uint64_t n, std::uint64_t m, Lcg64& rng) {
    if (m > n) throw std::invalid_argument("cannot sample more elements than the range holds");
    std::vector<std::uint64_t> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    for (std::uint64_t i = n; i-- > 1;) {
        const std::uint64_t j = rng.next_below(i + 1);
        std::swap(pool[i], pool[j]);
    }
    std::vector<Integer> taken;
    taken.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) taken.emplace_back(static_cast<unsigned long>(pool[i]));
    return FiniteIntegerSet(std::move(taken));
}

}  // namespace prodgaps
