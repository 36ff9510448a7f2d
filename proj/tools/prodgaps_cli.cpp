// Command-line front end: construct, verify, certify, scan.
//
// Exit codes: 0 success/verified, 1 verification failure (a bug signal),
// 2 usage or config error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "prodgaps/errors.hpp"
#include "prodgaps/gap_finders.hpp"
#include "prodgaps/products.hpp"
#include "prodgaps/quotients.hpp"
#include "prodgaps/report_json.hpp"
#include "prodgaps/scan.hpp"
#include "prodgaps/sidon.hpp"
#include "prodgaps/version.hpp"

namespace {

using namespace prodgaps;

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write to " + out_path);
    out << text;
}

int cmd_sidon(const std::string& p_text, const std::string& out_path) {
    const Integer p(p_text);
    const SidonSet s = erdos_turan_sidon(p);
    const SidonCheck check = verify_sidon(s.elements);

    std::ostringstream text;
    for (const auto& v : s.elements) text << v.get_str() << '\n';
    OrderedJson verdict;
    verdict["p"] = s.p.get_str();
    verdict["size"] = s.elements.size();
    verdict["max"] = s.elements.max().get_str();
    verdict["min_gap"] = min_pairwise_gap(s.elements).get_str();
    verdict["sidon"] = check.valid;
    text << verdict.dump(2) << '\n';
    emit(out_path, text.str());
    return check.valid ? 0 : 1;
}

int cmd_construct(const std::string& alpha_text, std::optional<long> t, long n_max,
                  const std::string& out_path) {
    if (n_max < 1 || n_max > 8)
        throw std::invalid_argument("growth guard: --nmax must lie in [1, 8]; offsets grow "
                                    "doubly exponentially");
    const Rational alpha = parse_rational(alpha_text);
    const BlockFamilySpec spec = t ? theorem4_spec(alpha, *t) : theorem2_spec(alpha);

    std::ostringstream text;
    text << spec_json(spec).dump(2) << '\n';

    bool pass = true;
    OrderedJson verdict;
    verdict["x1"] = spec.x1.get_str();
    if (spec.kind == BlockKind::AllNaturals) {
        // The sequence is all of N; every gap of N*N is at least 1.
        verdict["min_product_gap"] = "1";
        verdict["pass"] = true;
        text << verdict.dump(2) << '\n';
    } else {
        const MaterializedSequence seq = materialize(spec, n_max);
        for (const auto& block : seq.blocks) {
            text << "# block " << block.index << " (offset " << block.offset.get_str() << ")\n";
            for (const auto& v : block.elements) text << v.get_str() << '\n';
        }
        const auto min_gap = min_cross_block_product_gap(seq);
        if (min_gap) {
            pass = *min_gap >= spec.x1;
            verdict["min_cross_block_gap"] = min_gap->get_str();
        } else {
            verdict["min_cross_block_gap"] = nullptr;  // single block: nothing to separate
        }
        verdict["pass"] = pass;
        text << verdict.dump(2) << '\n';
    }
    emit(out_path, text.str());
    return pass ? 0 : 1;
}

int cmd_certify(const std::string& in_path, const std::string& alpha_text, long t,
                const std::string& window_text, const std::string& out_path) {
    const FiniteIntegerSet a = read_set_file(in_path);
    const Rational alpha = parse_rational(alpha_text);
    const Window observation = Window::parse(window_text);
    const CertificateBatch batch = certify_small_gaps(a, alpha, t, observation);

    bool all_verified = true;
    OrderedJson j;
    j["version"] = kVersion;
    j["config"] = {{"input", in_path},
                   {"alpha", rational_str(alpha)},
                   {"t", t},
                   {"observation", observation.str()}};
    j["count"] = batch.size();
    j["certificates"] = OrderedJson::array();
    for (const auto& cert : batch.difference_certificates) {
        all_verified = all_verified && cert.verify();
        j["certificates"].push_back(certificate_json(cert));
    }
    for (const auto& cert : batch.cluster_certificates) {
        all_verified = all_verified && cert.verify();
        j["certificates"].push_back(certificate_json(cert));
    }
    emit(out_path, j.dump(2) + "\n");
    return all_verified ? 0 : 1;
}

int cmd_products(const std::string& in_path, const std::string& window_text,
                 std::optional<long> t, std::size_t max_values, const std::string& out_path) {
    const FiniteIntegerSet a = read_set_file(in_path);
    if (a.empty()) throw std::invalid_argument("input set is empty");
    const Window w = window_text.empty() ? Window(1, a.max() * a.max()) : Window::parse(window_text);
    const GapReport report = products_in_window(a, w);
    emit(out_path, gap_report_json(report, t, max_values).dump(2) + "\n");
    return 0;
}

int cmd_quotients(const std::string& in_path, const std::string& n_text, bool thm5, bool close,
                  const std::string& out_path) {
    const FiniteIntegerSet a = read_set_file(in_path);
    const Integer n_cap(n_text);

    bool pass = true;
    OrderedJson j;
    j["version"] = kVersion;
    j["config"] = {{"input", in_path}, {"N", n_cap.get_str()}};
    j["quotient_size"] = quotient_set(a).size();
    if (thm5) {
        const auto report = theorem5_check(a, n_cap);
        pass = pass && report.pass;
        j["theorem5"] = theorem5_json(report);
    }
    if (close) {
        const auto pair = close_quotients(a, n_cap);
        pass = pass && pair.bounds_hold;
        j["close_quotients"] = close_quotients_json(pair);
    }
    emit(out_path, j.dump(2) + "\n");
    return pass ? 0 : 1;
}

int cmd_scan(const std::string& config_path, std::optional<std::uint64_t> seed,
             const std::string& format, const std::string& out_prefix) {
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot open config file " + config_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    ScanConfig config = ScanConfig::from_json_text(buf.str());
    if (seed) config.seed = *seed;
    const ScanResult result = run_scan(config);

    const std::string csv = scan_csv(result);
    const std::string json = scan_json(config, result);
    if (format == "csv") {
        emit(out_prefix, csv);
    } else if (format == "json") {
        emit(out_prefix, json);
    } else if (out_prefix.empty()) {
        std::cout << csv << json;
    } else {
        emit(out_prefix + ".csv", csv);
        emit(out_prefix + ".json", json);
    }
    return result.all_theorem5_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic experiments on gaps of product sequences B = A*A"};
    app.set_version_flag("--version", prodgaps::kVersion);
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write output to this path instead of stdout")
        ->capture_default_str();

    // sidon
    auto* sidon = app.add_subcommand("sidon", "Erdos-Turan Sidon set for an odd prime p");
    std::string p_text;
    sidon->add_option("p", p_text, "odd prime")->required();

    // construct
    auto* construct = app.add_subcommand(
        "construct", "block sequence with product gaps at least x1 (sparse-product construction)");
    std::string alpha_text;
    long t_value = 0;
    long n_max = 0;
    construct->add_option("--alpha", alpha_text, "density target, an exact rational num/den")
        ->required();
    auto* construct_t = construct->add_option("--t", t_value, "t-gap variant, t >= 2");
    construct->add_option("--nmax", n_max, "number of blocks to materialize (<= 8)")->required();

    // certify
    auto* certify = app.add_subcommand(
        "certify", "pigeonhole certificates for small product gaps in dense windows");
    std::string in_path, window_text;
    long certify_t = 1;
    certify->add_option("--in", in_path, "set file, newline-delimited decimals")->required();
    certify->add_option("--alpha", alpha_text, "density threshold, exact rational in (0,1)")
        ->required();
    certify->add_option("--t", certify_t, "1: consecutive gaps; >= 2: t-gap clusters")
        ->capture_default_str();
    certify->add_option("--window", window_text, "observation range lo..hi")->required();

    // products
    auto* products = app.add_subcommand("products", "distinct pair products in a window, with gaps");
    long products_t = 0;
    std::size_t max_values = 1000;
    products->add_option("--in", in_path, "set file")->required();
    products->add_option("--window", window_text, "window lo..hi (default 1..max^2)");
    auto* products_t_opt = products->add_option("--t", products_t, "also report the minimum t-gap");
    products->add_option("--max-values", max_values, "suppress the value list above this size")
        ->capture_default_str();

    // quotients
    auto* quotients = app.add_subcommand("quotients", "quotient set A/A and its lower bounds");
    std::string n_text;
    bool thm5 = false, close = false;
    quotients->add_option("--in", in_path, "set file")->required();
    quotients->add_option("--N", n_text, "ambient bound: A must lie in [1, N]")->required();
    quotients->add_flag("--thm5", thm5, "run the quotient-set lower-bound check");
    quotients->add_flag("--close", close, "find the closest quotient pair and its product gap");

    // scan
    auto* scan = app.add_subcommand("scan", "empirical scans of the quotient-set questions");
    std::string config_path, format;
    std::uint64_t seed_value = 0;
    scan->add_option("--config", config_path, "JSON config file")->required();
    auto* seed_opt = scan->add_option("--seed", seed_value, "override the config seed");
    scan->add_option("--format", format, "emit a single stream: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (sidon->parsed()) return cmd_sidon(p_text, out_path);
        if (construct->parsed())
            return cmd_construct(alpha_text,
                                 construct_t->count() ? std::optional<long>(t_value) : std::nullopt,
                                 n_max, out_path);
        if (certify->parsed())
            return cmd_certify(in_path, alpha_text, certify_t, window_text, out_path);
        if (products->parsed())
            return cmd_products(in_path, window_text,
                                products_t_opt->count() ? std::optional<long>(products_t)
                                                        : std::nullopt,
                                max_values, out_path);
        if (quotients->parsed()) return cmd_quotients(in_path, n_text, thm5, close, out_path);
        if (scan->parsed())
            return cmd_scan(config_path,
                            seed_opt->count() ? std::optional<std::uint64_t>(seed_value)
                                              : std::nullopt,
                            format, out_path);
    } catch (const prodgaps::internal_error& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 1;
    } catch (const prodgaps::construction_unavailable& e) {
        std::cerr << "construction unavailable: " << e.what() << '\n';
        return 2;
    } catch (const prodgaps::insufficient_size& e) {
        std::cerr << "insufficient size: " << e.what() << '\n';
        return 2;
    } catch (const prodgaps::enumeration_too_large& e) {
        std::cerr << "too large: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
