#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "prodgaps/numeric.hpp"

namespace prodgaps {

// Closed integer interval [lo, hi]. Its length counts the integers it
// contains: hi - lo + 1.
struct Window {
    Integer lo;
    Integer hi;

    Window(Integer lo_, Integer hi_);

    Integer length() const { return hi - lo + 1; }
    bool contains(const Integer& v) const { return lo <= v && v <= hi; }

    // "lo..hi"
    static Window parse(const std::string& text);
    std::string str() const;

    bool operator==(const Window& o) const { return lo == o.lo && hi == o.hi; }
};

// Sorted distinct nonnegative integers; the universal set carrier.
class FiniteIntegerSet {
public:
    FiniteIntegerSet() = default;
    // Sorts and deduplicates; rejects negative elements.
    explicit FiniteIntegerSet(std::vector<Integer> elements);

    // {lo, lo+1, ..., hi}
    static FiniteIntegerSet interval(const Integer& lo, const Integer& hi);

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const Integer& operator[](std::size_t i) const { return elems_[i]; }
    const Integer& min() const;
    const Integer& max() const;
    const std::vector<Integer>& values() const { return elems_; }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool contains(const Integer& v) const;
    Integer count_in(const Window& w) const;
    bool subset_of(const Window& w) const;
    FiniteIntegerSet intersect(const Window& w) const;
    // [first, last) index range of elements inside w.
    std::pair<std::size_t, std::size_t> index_range(const Window& w) const;

    bool operator==(const FiniteIntegerSet& o) const { return elems_ == o.elems_; }

private:
    std::vector<Integer> elems_;
};

// |set ∩ w| / |w|, exact.
Rational density_in_window(const FiniteIntegerSet& set, const Window& w);

// Best density over all windows of the given length inside the observation
// range: the finite-prefix upper Banach density estimator.
Rational banach_density_estimate(const FiniteIntegerSet& set, const Integer& window_length,
                                 const Window& observation);

// Greedy left-to-right maximal collection of pairwise disjoint windows of the
// given length, each holding at least alpha * window_length elements of set.
std::vector<Window> find_dense_windows(const FiniteIntegerSet& set, const Integer& window_length,
                                       const Rational& alpha, const Window& observation);

// Newline-delimited decimal integers; '#' starts a comment.
FiniteIntegerSet read_set(std::istream& in);
FiniteIntegerSet read_set_file(const std::string& path);
void write_set(std::ostream& out, const FiniteIntegerSet& set);

}  // namespace prodgaps
