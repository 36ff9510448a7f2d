#include <doctest.h>

#include "oracles.hpp"
#include "prodgaps/scan.hpp"

using namespace prodgaps;

namespace {

ScanConfig small_config() {
    ScanConfig config;
    config.seed = 42;
    config.trials = 3;
    config.n_values = {Integer(10), Integer(20)};
    config.alphas = {Rational(1, 4), Rational(1, 2)};
    config.families = {"interval", "ap", "random"};
    return config;
}

}  // namespace

TEST_CASE("scan config parsing and validation") {
    const auto config = ScanConfig::from_json_text(
        R"({"seed": 7, "trials": 2, "N": [10], "alphas": ["1/4"], "families": ["random"]})");
    CHECK(config.seed == 7);
    CHECK(config.alphas == std::vector<Rational>{Rational(1, 4)});

    CHECK_THROWS_AS(ScanConfig::from_json_text("not json"), std::invalid_argument);
    CHECK_THROWS_AS(ScanConfig::from_json_text(
                        R"({"N": [10], "alphas": ["3/2"], "families": ["random"]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(ScanConfig::from_json_text(
                        R"({"N": [10], "alphas": ["1/4"], "families": ["mystery"]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(ScanConfig::from_json_text(R"({"alphas": ["1/4"]})"), std::invalid_argument);
}

TEST_CASE("identical config and seed give identical bytes") {
    const auto config = small_config();
    const auto r1 = run_scan(config);
    const auto r2 = run_scan(config);
    CHECK(scan_csv(r1) == scan_csv(r2));
    CHECK(scan_json(config, r1) == scan_json(config, r2));
    CHECK(r1.all_theorem5_pass);
}

TEST_CASE("interval family ratio matches the totient sum") {
    ScanConfig config;
    config.n_values = {Integer(20)};
    config.families = {"interval"};
    const auto result = run_scan(config);
    REQUIRE(result.rows.size() == 1);
    const auto phi = oracles::totients_by_sieve(20);
    long sum = 0;
    for (long k = 2; k <= 20; ++k) sum += phi[k];
    CHECK(result.rows[0].q_ratio == make_rational(sum, 400));
}

TEST_CASE("exhaustive mode covers every viable subset and passes theorem5") {
    ScanConfig config;
    config.exhaustive_n = Integer(6);
    const auto result = run_scan(config);
    CHECK(result.rows.size() == (1UL << 6) - 1 - 6);  // no empty set, no singletons
    CHECK(result.all_theorem5_pass);
}

TEST_CASE("csv shape is stable") {
    const auto result = run_scan(small_config());
    const auto csv = scan_csv(result);
    CHECK(csv.rfind("family,seed,alpha_num,alpha_den,N,q_ratio_num,q_ratio_den,"
                    "class_ratio_num,class_ratio_den\n", 0) == 0);
    // one header plus one line per row
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + static_cast<long>(result.rows.size()));
}
