#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "prodgaps/integer_set.hpp"

namespace prodgaps {

// Strict mode enforces the pigeonhole preconditions (and a certificate is
// then guaranteed); illustrative mode skips them and reports failure softly
// by returning nullopt.
enum class FinderMode { Strict, Illustrative };

// Two couples (a, a_lo) and (b, b_lo) with the same positive difference, each
// couple inside one subwindow of length L; the cross products a*b_lo and
// a_lo*b then differ by d*(b - a), which is small and nonzero.
struct GapCertificate {
    Rational alpha;
    Integer subwindow_length;  // L = ceil(2/alpha)
    Window window;             // length L^2 in strict mode

    Integer a, a_lo;  // first couple, a > a_lo
    Integer b, b_lo;  // second couple, b > b_lo
    Integer common_difference;
    Integer product_first;    // a * b_lo
    Integer product_second;   // a_lo * b
    Integer within_subwindow_pairs;  // counting-lemma quantity

    Integer product_gap() const;
    Integer pair_bound() const;      // (L-1)^2 (L+1)
    Rational alpha_bound() const;    // 16 / alpha^3

    // Re-derives every invariant from the raw integers.
    bool verify() const;
};

// t+1 pairs from one window sharing the sum s; their products are pairwise
// distinct and packed into a span below L^2.
struct ClusterCertificate {
    Rational alpha;
    long t = 0;
    Integer window_length;  // L = ceil(4t/alpha^2)
    Window window;

    Integer sum;
    std::vector<std::pair<Integer, Integer>> pairs;  // (a, a') with a <= a'
    std::vector<Integer> products;
    Integer pair_sum_count;  // counting-lemma quantity: all unordered sums in the window

    Integer span() const;            // max - min of products
    Rational alpha_bound() const;    // 25 t^2 / alpha^4

    bool verify() const;
};

Integer difference_subwindow_count(const Rational& alpha);        // ceil(2/alpha)
Integer cluster_window_length(const Rational& alpha, long t);     // ceil(4t/alpha^2)

// Splits w into L subwindows of length L, takes per subwindow the first pair
// realizing each difference value, and returns the smallest difference
// realized twice (couples ordered by subwindow). Preconditions in strict
// mode: |w| = L^2, elements inside w, |A| >= alpha L^2.
std::optional<GapCertificate> find_difference_collision(const FiniteIntegerSet& a_in_window,
                                                        const Window& w, const Rational& alpha,
                                                        FinderMode mode = FinderMode::Strict);

// Smallest sum s obtained in at least t+1 ways a + a' (a <= a', both in the
// window), with the lexicographically first t+1 pairs. Preconditions in
// strict mode: |w| = L, elements inside w, |A| >= alpha L.
std::optional<ClusterCertificate> find_sum_representations(const FiniteIntegerSet& a_in_window,
                                                           const Window& w, const Rational& alpha,
                                                           long t,
                                                           FinderMode mode = FinderMode::Strict);

// One certificate per disjoint dense window found in the observation range:
// the finite rendering of "infinitely often". t = 1 searches difference
// collisions in windows of length L^2; t >= 2 searches sum clusters in
// windows of length L.
struct CertificateBatch {
    long t = 1;
    std::vector<GapCertificate> difference_certificates;
    std::vector<ClusterCertificate> cluster_certificates;

    std::size_t size() const {
        return difference_certificates.size() + cluster_certificates.size();
    }
};

CertificateBatch certify_small_gaps(const FiniteIntegerSet& a, const Rational& alpha, long t,
                                    const Window& observation);

}  // namespace prodgaps
