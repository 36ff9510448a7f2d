#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prodgaps/numeric.hpp"
#include "prodgaps/quotients.hpp"

namespace prodgaps {

// Empirical scans of the quotient-set questions: exact ratios
// |A/A| / (alpha^2 N^2) and max_d |(AxA)_d| / (alpha^2 N^2) per instance,
// plus a theorem5 check on every instance. Evidence only; nothing here
// asserts the open conjectures.
struct ScanConfig {
    std::uint64_t seed = 1;
    long trials = 1;  // random instances per (family, N, alpha)
    std::vector<Integer> n_values;
    std::vector<Rational> alphas;                // each strictly in (0, 1)
    std::vector<std::string> families;           // "interval", "ap", "random"
    std::optional<Integer> exhaustive_n;         // all subsets of [1, n], n <= 16

    // Throws std::invalid_argument on malformed or out-of-range fields.
    static ScanConfig from_json_text(const std::string& text);
    void validate() const;
};

struct ScanRow {
    std::string family;
    std::uint64_t seed = 0;   // instance seed; subset mask for exhaustive rows
    Rational alpha;           // exact |A|/N
    Integer n;
    Rational q_ratio;         // |A/A| / (alpha^2 N^2)
    Rational class_ratio;     // max_d |(AxA)_d| / (alpha^2 N^2)
    Theorem5Report theorem5;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    // family -> (min q_ratio, min class_ratio)
    std::map<std::string, std::pair<Rational, Rational>> family_minima;
    bool all_theorem5_pass = true;
};

ScanResult run_scan(const ScanConfig& config);

// Fixed-header CSV, one row per instance.
std::string scan_csv(const ScanResult& result);

// Full JSON report: resolved config, per-instance theorem5 records, minima.
std::string scan_json(const ScanConfig& config, const ScanResult& result);

}  // namespace prodgaps
