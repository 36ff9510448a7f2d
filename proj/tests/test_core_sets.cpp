#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "prodgaps/integer_set.hpp"
#include "prodgaps/rng.hpp"

using namespace prodgaps;

namespace {

FiniteIntegerSet multiples(long step, long hi) {
    std::vector<Integer> v;
    for (long x = step; x <= hi; x += step) v.emplace_back(x);
    return FiniteIntegerSet(std::move(v));
}

}  // namespace

TEST_CASE("window basics") {
    const Window w(3, 7);
    CHECK(w.length() == 5);
    CHECK(w.contains(3));
    CHECK(w.contains(7));
    CHECK(!w.contains(8));
    CHECK(Window::parse("3..7") == w);
    CHECK(w.str() == "3..7");
    CHECK_THROWS_AS(Window(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(Window::parse("5-7"), std::invalid_argument);
}

TEST_CASE("set construction sorts, dedups, rejects negatives") {
    FiniteIntegerSet s(std::vector<Integer>{5, 1, 3, 3, 1});
    CHECK(s.size() == 3);
    CHECK(s[0] == 1);
    CHECK(s[2] == 5);
    CHECK_THROWS_AS(FiniteIntegerSet(std::vector<Integer>{-1, 2}), std::invalid_argument);
    CHECK(FiniteIntegerSet::interval(1, 4).size() == 4);
}

TEST_CASE("set io round trip with comments") {
    std::istringstream in("# header\n3\n1  17 # trailing\n\n003\n");
    const FiniteIntegerSet s = read_set(in);
    CHECK(s == FiniteIntegerSet(std::vector<Integer>{1, 3, 17}));
    std::ostringstream out;
    write_set(out, s);
    CHECK(out.str() == "1\n3\n17\n");
    std::istringstream bad("12x\n");
    CHECK_THROWS_AS(read_set(bad), std::invalid_argument);
}

TEST_CASE("rational parsing is exact and rejects decimals") {
    CHECK(parse_rational("1/20") == Rational(1, 20));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(rational_str(Rational(1, 2)) == "1/2");
    CHECK(rational_str(Rational(3)) == "3");
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("density_in_window examples") {
    CHECK(density_in_window(multiples(2, 100), Window(1, 100)) == Rational(1, 2));
    CHECK(density_in_window(FiniteIntegerSet{}, Window(1, 10)) == 0);
    CHECK(density_in_window(FiniteIntegerSet::interval(1, 8), Window(1, 16)) == Rational(1, 2));
}

TEST_CASE("banach estimate examples") {
    CHECK(banach_density_estimate(FiniteIntegerSet::interval(1, 50), 50, Window(1, 100)) == 1);
    // odd numbers in [1,100]
    std::vector<Integer> odds;
    for (long x = 1; x <= 100; x += 2) odds.emplace_back(x);
    CHECK(banach_density_estimate(FiniteIntegerSet(std::move(odds)), 10, Window(1, 100)) ==
          Rational(1, 2));
    CHECK(banach_density_estimate(multiples(3, 300), 10, Window(1, 300)) == Rational(2, 5));
    CHECK_THROWS_AS(banach_density_estimate(multiples(3, 300), 301, Window(1, 300)),
                    std::invalid_argument);
}

TEST_CASE("banach estimate agrees with the full slide on small seeded sets") {
    Lcg64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto set = sample_subset(60, 1 + rng.next_below(40), rng);
        const long k = 1 + static_cast<long>(rng.next_below(20));
        const Window obs(1, 60);
        CHECK(banach_density_estimate(set, k, obs) == oracles::naive_banach(set, k, obs));
    }
}

TEST_CASE("banach estimate dominates the single-window density at tiling lengths") {
    Lcg64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const auto set = sample_subset(80, 1 + rng.next_below(60), rng);
        for (const long k : {1, 2, 4, 5, 8, 10, 16, 20, 40, 80})
            CHECK(banach_density_estimate(set, k, Window(1, 80)) >=
                  density_in_window(set, Window(1, 80)));
    }
}

TEST_CASE("find_dense_windows examples") {
    const auto full = find_dense_windows(FiniteIntegerSet::interval(1, 100), 10, 1, Window(1, 100));
    REQUIRE(full.size() == 10);
    CHECK(full.front() == Window(1, 10));
    CHECK(full.back() == Window(91, 100));

    CHECK(find_dense_windows(FiniteIntegerSet::interval(1, 8), 16, Rational(3, 4), Window(1, 16))
              .empty());

    const auto thirds = find_dense_windows(multiples(3, 300), 10, Rational(3, 10), Window(1, 300));
    CHECK(thirds.size() == 30);
    for (const auto& w : thirds) CHECK(multiples(3, 300).count_in(w) >= 3);
}

TEST_CASE("find_dense_windows matches the naive greedy scan") {
    Lcg64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const auto set = sample_subset(100, rng.next_below(70), rng);
        const long k = 1 + static_cast<long>(rng.next_below(15));
        const Rational alpha(1 + rng.next_below(4), 4);
        const Window obs(1, 100);
        const auto got = find_dense_windows(set, k, alpha, obs);
        const auto want = oracles::naive_dense_windows(set, k, alpha, obs);
        CHECK(got == want);
    }
}

TEST_CASE("dense windows are disjoint, in range, and re-countable") {
    const auto set = multiples(2, 64);
    const auto windows = find_dense_windows(set, 25, Rational(2, 5), Window(1, 64));
    for (std::size_t i = 0; i < windows.size(); ++i) {
        CHECK(windows[i].length() == 25);
        CHECK(windows[i].lo >= 1);
        CHECK(windows[i].hi <= 64);
        CHECK(Rational(set.count_in(windows[i])) >= Rational(2, 5) * 25);
        if (i > 0) CHECK(windows[i].lo > windows[i - 1].hi);
    }
}

TEST_CASE("alpha zero fills the observation range") {
    const auto out = find_dense_windows(FiniteIntegerSet{}, 7, 0, Window(1, 50));
    CHECK(out.size() == 50 / 7);
}
