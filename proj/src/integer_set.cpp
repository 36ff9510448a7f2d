#include "prodgaps/integer_set.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "prodgaps/errors.hpp"

namespace prodgaps {

Rational parse_rational(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("not an exact rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    if (text.find('.') != std::string::npos) throw bad();  // decimals rejected
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw bad();
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Window::Window(Integer lo_, Integer hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) throw std::invalid_argument("window " + lo.get_str() + ".." + hi.get_str() +
                                             " is empty");
}

Window Window::parse(const std::string& text) {
    const auto sep = text.find("..");
    if (sep == std::string::npos)
        throw std::invalid_argument("window must be written lo..hi, got '" + text + "'");
    try {
        return Window(Integer(text.substr(0, sep)), Integer(text.substr(sep + 2)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("window must be written lo..hi, got '" + text + "'");
    }
}

std::string Window::str() const { return lo.get_str() + ".." + hi.get_str(); }

FiniteIntegerSet::FiniteIntegerSet(std::vector<Integer> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (!elems_.empty() && elems_.front() < 0)
        throw std::invalid_argument("set elements must be nonnegative");
}

FiniteIntegerSet FiniteIntegerSet::interval(const Integer& lo, const Integer& hi) {
    if (lo < 0) throw std::invalid_argument("interval must start at a nonnegative integer");
    if (lo > hi) throw std::invalid_argument("empty interval");
    std::vector<Integer> v;
    for (Integer x = lo; x <= hi; ++x) v.push_back(x);
    FiniteIntegerSet s;
    s.elems_ = std::move(v);  // already sorted and distinct
    return s;
}

const Integer& FiniteIntegerSet::min() const {
    if (elems_.empty()) throw std::invalid_argument("empty set has no minimum");
    return elems_.front();
}

const Integer& FiniteIntegerSet::max() const {
    if (elems_.empty()) throw std::invalid_argument("empty set has no maximum");
    return elems_.back();
}

bool FiniteIntegerSet::contains(const Integer& v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

std::pair<std::size_t, std::size_t> FiniteIntegerSet::index_range(const Window& w) const {
    const auto first = std::lower_bound(elems_.begin(), elems_.end(), w.lo);
    const auto last = std::upper_bound(first, elems_.end(), w.hi);
    return {static_cast<std::size_t>(first - elems_.begin()),
            static_cast<std::size_t>(last - elems_.begin())};
}

Integer FiniteIntegerSet::count_in(const Window& w) const {
    const auto [first, last] = index_range(w);
    return Integer(static_cast<unsigned long>(last - first));
}

bool FiniteIntegerSet::subset_of(const Window& w) const {
    return elems_.empty() || (w.contains(elems_.front()) && w.contains(elems_.back()));
}

FiniteIntegerSet FiniteIntegerSet::intersect(const Window& w) const {
    const auto [first, last] = index_range(w);
    FiniteIntegerSet out;
    out.elems_.assign(elems_.begin() + first, elems_.begin() + last);
    return out;
}

Rational density_in_window(const FiniteIntegerSet& set, const Window& w) {
    return make_rational(set.count_in(w), w.length());
}

namespace {

bool window_qualifies(const FiniteIntegerSet& set, const Integer& lo, const Integer& k,
                      const Rational& alpha) {
    const Integer count = set.count_in(Window(lo, lo + k - 1));
    // count >= alpha * k, cross-multiplied
    return count * alpha.get_den() >= alpha.get_num() * k;
}

}  // namespace

Rational banach_density_estimate(const FiniteIntegerSet& set, const Integer& window_length,
                                 const Window& observation) {
    if (window_length < 1) throw std::invalid_argument("window length must be positive");
    if (window_length > observation.length())
        throw std::invalid_argument("window length exceeds the observation range");

    const Integer last_start = observation.hi - window_length + 1;
    // The best window can be taken to start at one of its own elements, or at
    // the last start position when that element sits too far right.
    Integer best = 0;
    auto consider = [&](const Integer& start) {
        if (start < observation.lo || start > last_start) return;
        Integer c = set.count_in(Window(start, start + window_length - 1));
        if (c > best) best = c;
    };
    consider(last_start);
    const auto [first, last] = set.index_range(observation);
    for (std::size_t i = first; i < last; ++i) consider(set[i]);
    return make_rational(best, window_length);
}

std::vector<Window> find_dense_windows(const FiniteIntegerSet& set, const Integer& window_length,
                                       const Rational& alpha, const Window& observation) {
    if (window_length < 1) throw std::invalid_argument("window length must be positive");
    if (alpha < 0 || alpha > 1) throw std::invalid_argument("alpha must lie in [0, 1]");

    std::vector<Window> out;
    const Integer last_start = observation.hi - window_length + 1;
    Integer pos = observation.lo;
    // Greedy: take the leftmost qualifying window, then continue just past it.
    // Between element-entry positions the count of a sliding window can only
    // drop, so the leftmost qualifying start is either the current position or
    // the position where the next element enters on the right.
    while (pos <= last_start) {
        if (window_qualifies(set, pos, window_length, alpha)) {
            out.emplace_back(pos, pos + window_length - 1);
            pos += window_length;
            continue;
        }
        // Next candidate: smallest element strictly beyond the current right
        // edge, pulled back to be that window's last covered position.
        if (pos + window_length > observation.hi) break;
        const auto [first, last] = set.index_range(Window(pos + window_length, observation.hi));
        bool taken = false;
        for (std::size_t j = first; j < last; ++j) {
            Integer cand = set[j] - window_length + 1;
            if (cand > last_start) break;
            if (window_qualifies(set, cand, window_length, alpha)) {
                out.emplace_back(cand, cand + window_length - 1);
                pos = cand + window_length;
                taken = true;
                break;
            }
        }
        if (!taken) break;
    }
    return out;
}

FiniteIntegerSet read_set(std::istream& in) {
    std::vector<Integer> v;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string tok;
        while (fields >> tok) {
            try {
                v.emplace_back(tok);
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("not a decimal integer: '" + tok + "'");
            }
        }
    }
    return FiniteIntegerSet(std::move(v));
}

FiniteIntegerSet read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open set file " + path);
    return read_set(in);
}

void write_set(std::ostream& out, const FiniteIntegerSet& set) {
    for (const auto& v : set) out << v.get_str() << '\n';
}

}  // namespace prodgaps
