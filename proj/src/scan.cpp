#include "prodgaps/scan.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "prodgaps/errors.hpp"
#include "prodgaps/rng.hpp"
#include "prodgaps/version.hpp"

namespace prodgaps {

namespace {

const std::vector<std::string> kKnownFamilies = {"interval", "ap", "random"};

Integer max_class_size(const GcdClassTable& classes) {
    Integer best = 0;
    for (const auto& [d, c] : classes)
        if (c > best) best = c;
    return best;
}

ScanRow make_row(std::string family, std::uint64_t seed, const FiniteIntegerSet& a,
                 const Integer& n) {
    ScanRow row;
    row.family = std::move(family);
    row.seed = seed;
    row.n = n;
    row.theorem5 = theorem5_check(a, n);
    row.alpha = row.theorem5.alpha;
    const Rational denom = row.alpha * row.alpha * Rational(n * n);
    row.q_ratio = Rational(row.theorem5.quotient_size) / denom;
    row.class_ratio = Rational(max_class_size(gcd_classes(a))) / denom;
    return row;
}

}  // namespace

void ScanConfig::validate() const {
    for (const auto& f : families)
        if (std::find(kKnownFamilies.begin(), kKnownFamilies.end(), f) == kKnownFamilies.end())
            throw std::invalid_argument("unknown family '" + f + "'");
    for (const auto& alpha : alphas)
        if (alpha <= 0 || alpha >= 1)
            throw std::invalid_argument("alpha " + rational_str(alpha) + " must lie in (0, 1)");
    for (const auto& n : n_values)
        if (n < 2) throw std::invalid_argument("N must be >= 2");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (exhaustive_n && (*exhaustive_n < 2 || *exhaustive_n > 16))
        throw std::invalid_argument("exhaustive N must lie in [2, 16]");
    if (families.empty() && !exhaustive_n)
        throw std::invalid_argument("nothing to scan: no families and no exhaustive N");
}

ScanConfig ScanConfig::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    ScanConfig config;
    try {
        if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("trials")) config.trials = j.at("trials").get<long>();
        if (j.contains("N"))
            for (const auto& n : j.at("N")) config.n_values.emplace_back(n.get<long>());
        if (j.contains("alphas"))
            for (const auto& a : j.at("alphas"))
                config.alphas.push_back(parse_rational(a.get<std::string>()));
        if (j.contains("families"))
            for (const auto& f : j.at("families"))
                config.families.push_back(f.get<std::string>());
        if (j.contains("exhaustive_N")) config.exhaustive_n = Integer(j.at("exhaustive_N").get<long>());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed config field: ") + e.what());
    }
    config.validate();
    return config;
}

ScanResult run_scan(const ScanConfig& config) {
    config.validate();
    ScanResult result;

    auto add = [&result](ScanRow row) {
        auto [it, fresh] = result.family_minima.emplace(
            row.family, std::make_pair(row.q_ratio, row.class_ratio));
        if (!fresh) {
            it->second.first = std::min(it->second.first, row.q_ratio);
            it->second.second = std::min(it->second.second, row.class_ratio);
        }
        result.all_theorem5_pass = result.all_theorem5_pass && row.theorem5.pass;
        result.rows.push_back(std::move(row));
    };

    if (config.exhaustive_n) {
        const long n = config.exhaustive_n->get_si();
        for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
            if (__builtin_popcountl(mask) < 2) continue;
            std::vector<Integer> elems;
            for (long bit = 0; bit < n; ++bit)
                if (mask & (1UL << bit)) elems.emplace_back(bit + 1);
            add(make_row("exhaustive", mask, FiniteIntegerSet(std::move(elems)), *config.exhaustive_n));
        }
    }

    for (const auto& family : config.families) {
        if (family == "interval") {
            for (const auto& n : config.n_values)
                add(make_row("interval", 0, FiniteIntegerSet::interval(1, n), n));
        } else if (family == "ap") {
            for (const auto& n : config.n_values) {
                for (const auto& alpha : config.alphas) {
                    const Integer step = ceil_rational(Rational(1) / alpha);
                    std::vector<Integer> elems;
                    for (Integer v = 1; v <= n; v += step) elems.push_back(v);
                    if (elems.size() < 2) continue;
                    add(make_row("ap", 0, FiniteIntegerSet(std::move(elems)), n));
                }
            }
        } else if (family == "random") {
            Lcg64 master(config.seed);
            for (const auto& n : config.n_values) {
                for (const auto& alpha : config.alphas) {
                    for (long trial = 0; trial < config.trials; ++trial) {
                        const std::uint64_t instance_seed = master.next();
                        const Integer m = floor_rational(alpha * Rational(n));
                        if (m < 2) continue;
                        Lcg64 rng(instance_seed);
                        const auto a = sample_subset(n.get_ui(), m.get_ui(), rng);
                        add(make_row("random", instance_seed, a, n));
                    }
                }
            }
        }
    }
    return result;
}

std::string scan_csv(const ScanResult& result) {
    std::ostringstream out;
    out << "family,seed,alpha_num,alpha_den,N,q_ratio_num,q_ratio_den,"
           "class_ratio_num,class_ratio_den\n";
    for (const auto& row : result.rows) {
        out << row.family << ',' << row.seed << ',' << row.alpha.get_num() << ','
            << row.alpha.get_den() << ',' << row.n << ',' << row.q_ratio.get_num() << ','
            << row.q_ratio.get_den() << ',' << row.class_ratio.get_num() << ','
            << row.class_ratio.get_den() << '\n';
    }
    return out.str();
}

std::string scan_json(const ScanConfig& config, const ScanResult& result) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;

    nlohmann::ordered_json cfg;
    cfg["seed"] = config.seed;
    cfg["trials"] = config.trials;
    cfg["N"] = nlohmann::ordered_json::array();
    for (const auto& n : config.n_values) cfg["N"].push_back(n.get_str());
    cfg["alphas"] = nlohmann::ordered_json::array();
    for (const auto& a : config.alphas) cfg["alphas"].push_back(rational_str(a));
    cfg["families"] = config.families;
    if (config.exhaustive_n) cfg["exhaustive_N"] = config.exhaustive_n->get_str();
    j["config"] = std::move(cfg);

    j["all_theorem5_pass"] = result.all_theorem5_pass;

    nlohmann::ordered_json minima;
    for (const auto& [family, pair] : result.family_minima) {
        minima[family] = {{"min_q_ratio", rational_str(pair.first)},
                          {"min_class_ratio", rational_str(pair.second)}};
    }
    j["family_minima"] = std::move(minima);

    j["instances"] = nlohmann::ordered_json::array();
    for (const auto& row : result.rows) {
        nlohmann::ordered_json inst;
        inst["family"] = row.family;
        inst["seed"] = row.seed;
        inst["alpha"] = rational_str(row.alpha);
        inst["N"] = row.n.get_str();
        inst["q_ratio"] = rational_str(row.q_ratio);
        inst["class_ratio"] = rational_str(row.class_ratio);
        inst["theorem5"] = {{"T", row.theorem5.t_cap.get_str()},
                            {"best_d", row.theorem5.best_d.get_str()},
                            {"class_size", row.theorem5.class_size.get_str()},
                            {"quotient_size", row.theorem5.quotient_size.get_str()},
                            {"bound", rational_str(row.theorem5.bound)},
                            {"intermediate_bound", rational_str(row.theorem5.intermediate_bound)},
                            {"pass", row.theorem5.pass}};
        j["instances"].push_back(std::move(inst));
    }
    return j.dump(2) + "\n";
}

}  // namespace prodgaps
