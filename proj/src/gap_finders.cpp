#include "prodgaps/gap_finders.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <stdexcept>

#include "prodgaps/errors.hpp"

namespace prodgaps {

namespace {

void require_alpha_unit(const Rational& alpha, bool allow_one) {
    if (alpha <= 0 || alpha > 1 || (!allow_one && alpha == 1))
        throw std::invalid_argument("alpha must lie in (0, 1" + std::string(allow_one ? "]" : ")"));
}

}  // namespace

Integer difference_subwindow_count(const Rational& alpha) {
    require_alpha_unit(alpha, true);
    return ceil_rational(Rational(2) / alpha);
}

Integer cluster_window_length(const Rational& alpha, long t) {
    require_alpha_unit(alpha, true);
    if (t < 2) throw std::invalid_argument("t must be >= 2");
    return ceil_rational(Rational(4 * t) / (alpha * alpha));
}

Integer GapCertificate::product_gap() const { return abs(product_first - product_second); }

Integer GapCertificate::pair_bound() const {
    const Integer& l = subwindow_length;
    return (l - 1) * (l - 1) * (l + 1);
}

Rational GapCertificate::alpha_bound() const { return Rational(16) / (alpha * alpha * alpha); }

bool GapCertificate::verify() const {
    if (alpha <= 0 || alpha > 1) return false;
    const Integer& l = subwindow_length;
    if (l < 2) return false;
    if (window.length() > l * l) return false;
    for (const Integer* e : {&a, &a_lo, &b, &b_lo})
        if (!window.contains(*e)) return false;
    if (!(a > a_lo && b > b_lo)) return false;
    if (a - a_lo != common_difference || b - b_lo != common_difference) return false;
    if (common_difference <= 0 || common_difference >= l) return false;
    // Each couple must sit inside a single subwindow of the partition.
    auto subwindow = [&](const Integer& e) { return Integer((e - window.lo) / l); };
    if (subwindow(a) != subwindow(a_lo) || subwindow(b) != subwindow(b_lo)) return false;
    if (product_first != a * b_lo || product_second != a_lo * b) return false;
    const Integer gap = product_gap();
    if (gap <= 0 || gap > pair_bound()) return false;
    if (Rational(gap) >= alpha_bound()) return false;
    return true;
}

Integer ClusterCertificate::span() const {
    if (products.empty()) return 0;
    auto [lo, hi] = std::minmax_element(products.begin(), products.end());
    return *hi - *lo;
}

Rational ClusterCertificate::alpha_bound() const {
    const Rational a4 = alpha * alpha * alpha * alpha;
    return Rational(25 * t * t) / a4;
}

bool ClusterCertificate::verify() const {
    if (alpha <= 0 || alpha > 1 || t < 2) return false;
    if (pairs.size() != static_cast<std::size_t>(t) + 1) return false;
    if (products.size() != pairs.size()) return false;
    if (window.length() > window_length) return false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [x, y] = pairs[i];
        if (x > y) return false;
        if (!window.contains(x) || !window.contains(y)) return false;
        if (x + y != sum) return false;
        if (products[i] != x * y) return false;
    }
    const Integer l_sq = window_length * window_length;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const Integer diff = abs(products[i] - products[j]);
            // The proof identity: products at a common sum differ by
            // (a_i - a_j)(a_i' - a_j), which is below L^2 in magnitude.
            if (diff == 0) return false;
            if (diff != abs((pairs[i].first - pairs[j].first) * (pairs[i].second - pairs[j].first)))
                return false;
            if (diff >= l_sq) return false;
        }
    }
    if (span() >= l_sq) return false;
    if (Rational(l_sq) > alpha_bound()) return false;
    return true;
}

std::optional<GapCertificate> find_difference_collision(const FiniteIntegerSet& a_in_window,
                                                        const Window& w, const Rational& alpha,
                                                        FinderMode mode) {
    require_alpha_unit(alpha, true);
    const Integer l = difference_subwindow_count(alpha);
    const bool strict = mode == FinderMode::Strict;

    if (strict) {
        if (w.length() != l * l)
            throw std::invalid_argument("window length must be L^2 = " + Integer(l * l).get_str());
        if (!a_in_window.subset_of(w))
            throw std::invalid_argument("elements must lie inside the window");
        if (Integer(static_cast<unsigned long>(a_in_window.size())) * alpha.get_den() <
            alpha.get_num() * l * l)
            throw std::invalid_argument("density precondition fails: need at least alpha*L^2 elements");
    }

    struct Couple {
        Integer hi, lo;
    };
    // Per subwindow, the first couple realizing each difference value; then a
    // global collision on the difference values, smallest value first,
    // couples in subwindow order.
    std::map<Integer, std::vector<Couple>> by_difference;
    Integer pair_total = 0;

    std::size_t i = 0;
    while (i < a_in_window.size()) {
        Integer sub = (a_in_window[i] - w.lo) / l;
        std::size_t j = i;
        while (j < a_in_window.size() && (a_in_window[j] - w.lo) / l == sub) ++j;
        const std::size_t k = j - i;
        pair_total += Integer(static_cast<unsigned long>(k * (k - 1) / 2));
        std::map<Integer, Couple> local;
        for (std::size_t u = i; u < j; ++u)
            for (std::size_t v = u + 1; v < j; ++v)
                local.emplace(a_in_window[v] - a_in_window[u],
                              Couple{a_in_window[v], a_in_window[u]});
        for (auto& [d, couple] : local) by_difference[d].push_back(std::move(couple));
        i = j;
    }

    if (strict && pair_total < l)
        throw internal_error("counting lemma violated: fewer than L within-subwindow pairs");

    for (const auto& [d, couples] : by_difference) {
        if (couples.size() < 2) continue;
        GapCertificate cert{.alpha = alpha, .subwindow_length = l, .window = w};
        cert.a = couples[0].hi;
        cert.a_lo = couples[0].lo;
        cert.b = couples[1].hi;
        cert.b_lo = couples[1].lo;
        cert.common_difference = d;
        cert.product_first = cert.a * cert.b_lo;
        cert.product_second = cert.a_lo * cert.b;
        cert.within_subwindow_pairs = pair_total;
        if (!cert.verify()) {
            if (strict) throw internal_error("difference-collision certificate failed to verify");
            return std::nullopt;
        }
        return cert;
    }
    if (strict)
        throw internal_error("pigeonhole failed: no difference collision despite preconditions");
    return std::nullopt;
}

std::optional<ClusterCertificate> find_sum_representations(const FiniteIntegerSet& a_in_window,
                                                           const Window& w, const Rational& alpha,
                                                           long t, FinderMode mode) {
    require_alpha_unit(alpha, true);
    if (t < 2) throw std::invalid_argument("t must be >= 2");
    const Integer l = cluster_window_length(alpha, t);
    const bool strict = mode == FinderMode::Strict;
    const Integer count(static_cast<unsigned long>(a_in_window.size()));

    if (strict) {
        if (w.length() != l)
            throw std::invalid_argument("window length must be L = " + l.get_str());
        if (!a_in_window.subset_of(w))
            throw std::invalid_argument("elements must lie inside the window");
        if (count * alpha.get_den() < alpha.get_num() * l)
            throw std::invalid_argument("density precondition fails: need at least alpha*L elements");
    }

    const Integer pair_sum_count = count * (count + 1) / 2;
    if (strict) {
        // (alpha L)^2 / 2 <= n(n+1)/2 and n(n+1)/2 > 2Lt; both follow from
        // n >= alpha L and make the pigeonhole bite.
        const Rational lhs = (alpha * l) * (alpha * l) / 2;
        if (Rational(pair_sum_count) < lhs)
            throw internal_error("counting lemma violated: too few unordered sums");
        if (pair_sum_count <= 2 * l * t)
            throw internal_error("counting lemma violated: sums do not exceed 2Lt");
    }

    struct Reps {
        long count = 0;
        std::vector<std::pair<Integer, Integer>> first;  // capped at t+1
    };
    std::map<Integer, Reps> by_sum;
    const std::size_t want = static_cast<std::size_t>(t) + 1;
    for (std::size_t i = 0; i < a_in_window.size(); ++i) {
        for (std::size_t j = i; j < a_in_window.size(); ++j) {
            Reps& r = by_sum[a_in_window[i] + a_in_window[j]];
            ++r.count;
            if (r.first.size() < want) r.first.emplace_back(a_in_window[i], a_in_window[j]);
        }
    }

    for (const auto& [s, reps] : by_sum) {
        if (reps.count < static_cast<long>(want)) continue;
        ClusterCertificate cert{.alpha = alpha, .t = t, .window_length = l, .window = w};
        cert.sum = s;
        cert.pairs = reps.first;
        for (const auto& [x, y] : cert.pairs) cert.products.push_back(x * y);
        cert.pair_sum_count = pair_sum_count;
        if (!cert.verify()) {
            if (strict) throw internal_error("sum-cluster certificate failed to verify");
            return std::nullopt;
        }
        return cert;
    }
    if (strict)
        throw internal_error("pigeonhole failed: no sum obtained t+1 ways despite preconditions");
    return std::nullopt;
}

CertificateBatch certify_small_gaps(const FiniteIntegerSet& a, const Rational& alpha, long t,
                                    const Window& observation) {
    require_alpha_unit(alpha, false);
    if (t < 1) throw std::invalid_argument("t must be >= 1");

    CertificateBatch batch;
    batch.t = t;
    const Integer k = (t == 1) ? Integer(difference_subwindow_count(alpha) *
                                         difference_subwindow_count(alpha))
                               : cluster_window_length(alpha, t);
    if (k > observation.length()) return batch;  // no window can fit
    const auto windows = find_dense_windows(a, k, alpha, observation);

    const long nw = static_cast<long>(windows.size());
    std::vector<std::optional<GapCertificate>> diff_out(nw);
    std::vector<std::optional<ClusterCertificate>> cluster_out(nw);
    std::exception_ptr fail;

#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < nw; ++i) {
        try {
            const FiniteIntegerSet inside = a.intersect(windows[i]);
            if (t == 1)
                diff_out[i] = find_difference_collision(inside, windows[i], alpha);
            else
                cluster_out[i] = find_sum_representations(inside, windows[i], alpha, t);
        } catch (...) {
#pragma omp critical
            if (!fail) fail = std::current_exception();
        }
    }
    if (fail) std::rethrow_exception(fail);

    for (long i = 0; i < nw; ++i) {
        if (t == 1)
            batch.difference_certificates.push_back(std::move(*diff_out[i]));
        else
            batch.cluster_certificates.push_back(std::move(*cluster_out[i]));
    }
    return batch;
}

}  // namespace prodgaps
