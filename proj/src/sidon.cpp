#include "prodgaps/sidon.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "prodgaps/errors.hpp"

namespace prodgaps {

bool is_odd_prime(const Integer& p) {
    if (p < 3 || p % 2 == 0) return false;
    for (Integer d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

SidonSet erdos_turan_sidon(const Integer& p) {
    if (!is_odd_prime(p)) throw std::invalid_argument(p.get_str() + " is not an odd prime");
    if (!p.fits_ulong_p()) throw enumeration_too_large("prime too large to enumerate");

    std::vector<Integer> elems;
    const unsigned long pu = p.get_ui();
    elems.reserve(pu);
    for (unsigned long i = 0; i < pu; ++i) {
        Integer idx(static_cast<unsigned long>(i));
        elems.push_back(2 * p * idx + (idx * idx) % p);  // increasing in i
    }
    return SidonSet{p, FiniteIntegerSet(std::move(elems))};
}

SidonCheck verify_sidon(const FiniteIntegerSet& set) {
    // Sum-multiset criterion: every unordered pair sum, repetition allowed,
    // must be new.
    std::map<Integer, std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i; j < set.size(); ++j) {
            Integer sum = set[i] + set[j];
            auto [it, inserted] = seen.emplace(std::move(sum), std::make_pair(i, j));
            if (!inserted) {
                const auto [k, l] = it->second;
                return SidonCheck{false, {set[k], set[l], set[i], set[j]}};
            }
        }
    }
    return SidonCheck{};
}

Integer min_pairwise_gap(const FiniteIntegerSet& set) {
    if (set.size() < 2) throw std::invalid_argument("need at least 2 elements for a gap");
    Integer best = set[1] - set[0];
    for (std::size_t i = 2; i < set.size(); ++i) {
        Integer d = set[i] - set[i - 1];
        if (d < best) best = d;
    }
    return best;
}

}  // namespace prodgaps
