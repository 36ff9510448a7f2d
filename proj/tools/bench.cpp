// Times the OpenMP kernels against their serial reference implementations
// and reports the speedup. Inputs are synthetic seeded sets, so runs are
// repeatable.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "prodgaps/blocks.hpp"
#include "prodgaps/products.hpp"
#include "prodgaps/quotients.hpp"
#include "prodgaps/rng.hpp"
#include "prodgaps/serial.hpp"

using namespace prodgaps;

namespace {

double seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Serial, typename Parallel>
void compare(const char* name, Serial&& serial_fn, Parallel&& parallel_fn) {
    auto t0 = std::chrono::steady_clock::now();
    auto serial_out = serial_fn();
    const double t_serial = seconds(t0);

    t0 = std::chrono::steady_clock::now();
    auto parallel_out = parallel_fn();
    const double t_parallel = seconds(t0);

    const bool same = serial_out == parallel_out;
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", name, t_serial,
                t_parallel, t_parallel > 0 ? t_serial / t_parallel : 0.0,
                same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const int scale = argc > 1 ? std::stoi(argv[1]) : 1;
#ifdef _OPENMP
    std::printf("threads: %d, scale: %d\n", omp_get_max_threads(), scale);
#else
    std::printf("threads: 1 (OpenMP off), scale: %d\n", scale);
#endif

    Lcg64 rng(7);
    const auto a = sample_subset(20000UL * scale, 1200UL * scale, rng);

    compare("product_set", [&] { return serial::product_set(a); },
            [&] { return product_set(a); });

    compare("gcd_classes", [&] { return serial::gcd_classes(a); },
            [&] { return gcd_classes(a); });

    const auto small = sample_subset(5000UL * scale, 700UL * scale, rng);
    compare("quotient_set", [&] { return serial::quotient_set(small); },
            [&] { return quotient_set(small); });

    // p = 29, two blocks of 29 and 58 points: ~3800 pairs, ~1.5e7 quadruples
    const auto spec = theorem2_spec(Rational(1, 200));
    const auto seq = materialize(spec, 2);
    compare("cross_block_product_gap",
            [&] { return serial::min_cross_block_product_gap(seq); },
            [&] { return min_cross_block_product_gap(seq); });

    return 0;
}
