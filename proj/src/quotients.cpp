#include "prodgaps/quotients.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "prodgaps/errors.hpp"

namespace prodgaps {

namespace {

void require_pairable(const FiniteIntegerSet& a) {
    if (a.size() < 2) throw std::invalid_argument("need at least 2 elements");
    if (a.min() < 1) throw std::invalid_argument("quotients need strictly positive elements");
}

std::vector<Rational>& sort_dedup(std::vector<Rational>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::vector<Rational> quotient_set(const FiniteIntegerSet& a) {
    require_pairable(a);
    const long n = static_cast<long>(a.size());

#ifdef _OPENMP
    const int workers = omp_get_max_threads();
#else
    const int workers = 1;
#endif
    std::vector<std::vector<Rational>> parts(workers);

#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
#ifdef _OPENMP
        auto& mine = parts[omp_get_thread_num()];
#else
        auto& mine = parts[0];
#endif
        for (long j = i + 1; j < n; ++j) mine.push_back(make_rational(a[i], a[j]));
    }

    std::vector<Rational> all;
    for (auto& part : parts)
        all.insert(all.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    sort_dedup(all);
    return all;
}

namespace serial {

std::vector<Rational> quotient_set(const FiniteIntegerSet& a) {
    require_pairable(a);
    std::vector<Rational> all;
    all.reserve(a.size() * (a.size() - 1) / 2);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) all.push_back(make_rational(a[i], a[j]));
    sort_dedup(all);
    return all;
}

}  // namespace serial

std::vector<QuotientWitness> quotient_set_with_witnesses(const FiniteIntegerSet& a) {
    require_pairable(a);
    std::map<Rational, std::pair<Integer, Integer>> first_pair;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            first_pair.emplace(make_rational(a[i], a[j]), std::make_pair(a[i], a[j]));
    std::vector<QuotientWitness> out;
    out.reserve(first_pair.size());
    for (const auto& [q, pair] : first_pair) out.push_back({q, pair.first, pair.second});
    return out;  // map order = ascending fraction
}

GcdClassTable gcd_classes(const FiniteIntegerSet& a) {
    require_pairable(a);
    const long n = static_cast<long>(a.size());

#ifdef _OPENMP
    const int workers = omp_get_max_threads();
#else
    const int workers = 1;
#endif
    std::vector<GcdClassTable> parts(workers);

#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
#ifdef _OPENMP
        auto& mine = parts[omp_get_thread_num()];
#else
        auto& mine = parts[0];
#endif
        Integer g;
        for (long j = i + 1; j < n; ++j) {
            mpz_gcd(g.get_mpz_t(), a[i].get_mpz_t(), a[j].get_mpz_t());
            ++mine[g];
        }
    }

    GcdClassTable table;
    for (auto& part : parts)
        for (auto& [d, c] : part) table[d] += c;
    return table;
}

namespace serial {

GcdClassTable gcd_classes(const FiniteIntegerSet& a) {
    require_pairable(a);
    GcdClassTable table;
    Integer g;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            mpz_gcd(g.get_mpz_t(), a[i].get_mpz_t(), a[j].get_mpz_t());
            ++table[g];
        }
    }
    return table;
}

}  // namespace serial

namespace {

void require_in_range(const FiniteIntegerSet& a, const Integer& n_cap) {
    require_pairable(a);
    if (n_cap < 1) throw std::invalid_argument("N must be positive");
    if (a.max() > n_cap)
        throw std::invalid_argument("set is not contained in [1, " + n_cap.get_str() + "]");
}

}  // namespace

Theorem5Report theorem5_check(const FiniteIntegerSet& a, const Integer& n_cap) {
    require_in_range(a, n_cap);

    Theorem5Report report;
    report.alpha = make_rational(Integer(static_cast<unsigned long>(a.size())), n_cap);
    const Rational& alpha = report.alpha;
    report.t_cap = ceil_rational(Rational(2) / (alpha * alpha));

    const auto classes = gcd_classes(a);
    report.best_d = 0;
    report.class_size = 0;
    for (const auto& [d, c] : classes) {
        if (d > report.t_cap) break;
        if (c > report.class_size) {
            report.best_d = d;
            report.class_size = c;
        }
    }

    report.quotient_size = Integer(static_cast<unsigned long>(quotient_set(a).size()));
    const Rational n_sq(n_cap * n_cap);
    report.bound = alpha * alpha * alpha * alpha * n_sq / 9;
    const Rational t_q(report.t_cap);
    report.intermediate_bound = n_sq * (alpha * alpha / t_q - 1 / (t_q * t_q));

    report.pass = Rational(report.class_size) >= report.intermediate_bound &&
                  Rational(report.class_size) >= report.bound &&
                  Rational(report.quotient_size) >= report.bound;
    return report;
}

CloseQuotientPair close_quotients(const FiniteIntegerSet& a, const Integer& n_cap) {
    require_in_range(a, n_cap);
    const Rational alpha = make_rational(Integer(static_cast<unsigned long>(a.size())), n_cap);
    const Rational guarantee = alpha * alpha * alpha * alpha * Rational(n_cap * n_cap) / 9;
    if (guarantee <= 1)
        throw insufficient_size("alpha^4 N^2 / 9 = " + rational_str(guarantee) +
                                " <= 1: too few quotients for two to collide");

    const auto quotients = quotient_set_with_witnesses(a);
    if (quotients.size() < 2)
        throw internal_error("fewer than 2 quotients despite alpha^4 N^2 / 9 > 1");

    std::size_t best = 0;
    Rational best_dist = quotients[1].fraction - quotients[0].fraction;
    for (std::size_t i = 1; i + 1 < quotients.size(); ++i) {
        Rational d = quotients[i + 1].fraction - quotients[i].fraction;
        if (d < best_dist) {
            best_dist = std::move(d);
            best = i;
        }
    }

    CloseQuotientPair out;
    out.alpha = alpha;
    out.low = quotients[best].fraction;
    out.high = quotients[best + 1].fraction;
    out.low_num = quotients[best].num_elem;
    out.low_den = quotients[best].den_elem;
    out.high_num = quotients[best + 1].num_elem;
    out.high_den = quotients[best + 1].den_elem;
    out.distance = best_dist;
    const Rational a4 = alpha * alpha * alpha * alpha;
    out.distance_bound = Rational(9) / (a4 * Rational(n_cap * n_cap));
    out.product_gap = abs(out.low_num * out.high_den - out.low_den * out.high_num);
    out.gap_bound = Rational(9) / a4;
    out.bounds_hold =
        out.distance <= out.distance_bound && Rational(out.product_gap) <= out.gap_bound;
    return out;
}

}  // namespace prodgaps
