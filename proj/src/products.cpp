#include "prodgaps/products.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "prodgaps/errors.hpp"

namespace prodgaps {

std::vector<Integer> GapReport::gaps() const { return t_gaps(1); }

std::vector<Integer> GapReport::t_gaps(long t) const {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    std::vector<Integer> out;
    const std::size_t tu = static_cast<std::size_t>(t);
    if (values.size() > tu)
        for (std::size_t i = 0; i + tu < values.size(); ++i)
            out.push_back(values[i + tu] - values[i]);
    return out;
}

std::optional<Integer> GapReport::min_gap() const { return min_t_gap(1); }

std::optional<Integer> GapReport::min_t_gap(long t) const {
    const auto g = t_gaps(t);
    if (g.empty()) return std::nullopt;
    return *std::min_element(g.begin(), g.end());
}

namespace {

std::vector<Integer>& sort_dedup(std::vector<Integer>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

FiniteIntegerSet product_set(const FiniteIntegerSet& a) {
    if (a.empty()) throw std::invalid_argument("product set of an empty set");
    const long n = static_cast<long>(a.size());

#ifdef _OPENMP
    const int workers = omp_get_max_threads();
#else
    const int workers = 1;
#endif
    std::vector<std::vector<Integer>> parts(workers);

#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
#ifdef _OPENMP
        auto& mine = parts[omp_get_thread_num()];
#else
        auto& mine = parts[0];
#endif
        for (long j = i; j < n; ++j) mine.push_back(a[i] * a[j]);
    }

    std::vector<Integer> all;
    for (auto& part : parts)
        all.insert(all.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    sort_dedup(all);
    FiniteIntegerSet out(std::move(all));
    return out;
}

namespace serial {

FiniteIntegerSet product_set(const FiniteIntegerSet& a) {
    if (a.empty()) throw std::invalid_argument("product set of an empty set");
    std::vector<Integer> all;
    all.reserve(a.size() * (a.size() + 1) / 2);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i; j < a.size(); ++j) all.push_back(a[i] * a[j]);
    sort_dedup(all);
    return FiniteIntegerSet(std::move(all));
}

}  // namespace serial

namespace {

Integer ceil_div(const Integer& n, const Integer& d) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

Integer floor_div(const Integer& n, const Integer& d) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

// Products a*b with b from the slice [from, to) of set, a*b inside w and
// b >= b_floor. Appends to out.
void products_with_factor(const Integer& a, const FiniteIntegerSet& set, const Integer& b_floor,
                          const Window& w, std::vector<Integer>& out) {
    Integer lo = std::max(b_floor, ceil_div(w.lo, a));
    Integer hi = floor_div(w.hi, a);
    if (lo > hi) return;
    const auto [first, last] = set.index_range(Window(lo, hi));
    for (std::size_t j = first; j < last; ++j) out.push_back(a * set[j]);
}

}  // namespace

GapReport products_in_window(const FiniteIntegerSet& a, const Window& w) {
    if (w.lo < 1) throw std::invalid_argument("product windows must start at 1 or above");
    std::vector<Integer> values;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            // 0 never lands in w (w.lo >= 1); skip as a factor paired upward,
            // but 0*b = 0 for every b anyway.
            continue;
        }
        if (a[i] * a[i] > w.hi) break;  // all later pairs overshoot
        products_with_factor(a[i], a, a[i], w, values);
    }
    sort_dedup(values);
    return GapReport{w, std::move(values)};
}

GapReport products_in_window(const MaterializedSequence& seq, const Window& w) {
    if (w.lo < 1) throw std::invalid_argument("product windows must start at 1 or above");
    const long nb = static_cast<long>(seq.blocks.size());

    // Block pairs whose product range [min_i*min_j, max_i*max_j] meets w.
    std::vector<std::pair<long, long>> live;
    for (long i = 0; i < nb; ++i) {
        for (long j = i; j < nb; ++j) {
            const auto& bi = seq.blocks[i].elements;
            const auto& bj = seq.blocks[j].elements;
            if (bi.empty() || bj.empty()) continue;
            if (bi.min() * bj.min() > w.hi || bi.max() * bj.max() < w.lo) continue;
            live.emplace_back(i, j);
        }
    }

#ifdef _OPENMP
    const int workers = omp_get_max_threads();
#else
    const int workers = 1;
#endif
    std::vector<std::vector<Integer>> parts(workers);
    const long npairs = static_cast<long>(live.size());

#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < npairs; ++k) {
#ifdef _OPENMP
        auto& mine = parts[omp_get_thread_num()];
#else
        auto& mine = parts[0];
#endif
        const auto [i, j] = live[k];
        const auto& bi = seq.blocks[i].elements;
        const auto& bj = seq.blocks[j].elements;
        for (std::size_t u = 0; u < bi.size(); ++u) {
            if (bi[u] == 0) continue;
            const Integer b_floor = (i == j) ? bi[u] : bj.min();
            products_with_factor(bi[u], bj, b_floor, w, mine);
        }
    }

    std::vector<Integer> all;
    for (auto& part : parts)
        all.insert(all.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    sort_dedup(all);
    return GapReport{w, std::move(all)};
}

Integer min_gap_oracle(const FiniteIntegerSet& a, long t) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    const FiniteIntegerSet b = product_set(a);
    if (b.size() < static_cast<std::size_t>(t) + 1)
        throw std::invalid_argument("product set has fewer than t+1 values");
    const std::size_t tu = static_cast<std::size_t>(t);
    Integer best = b[tu] - b[0];
    for (std::size_t i = 1; i + tu < b.size(); ++i) {
        Integer d = b[i + tu] - b[i];
        if (d < best) best = std::move(d);
    }
    return best;
}

}  // namespace prodgaps
