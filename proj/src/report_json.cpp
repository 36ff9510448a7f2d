#include "prodgaps/report_json.hpp"

namespace prodgaps {

OrderedJson spec_json(const BlockFamilySpec& spec) {
    OrderedJson j;
    j["kind"] = block_kind_name(spec.kind);
    j["x1"] = spec.x1.get_str();
    if (spec.kind == BlockKind::SidonBlocks) {
        j["p"] = spec.p.get_str();
        j["m"] = spec.m.get_str();
        OrderedJson s = OrderedJson::array();
        for (const auto& v : spec.sidon) s.push_back(v.get_str());
        j["S"] = std::move(s);
    }
    if (spec.alpha) j["alpha"] = rational_str(*spec.alpha);
    if (spec.t) j["t"] = *spec.t;
    return j;
}

OrderedJson gap_report_json(const GapReport& report, std::optional<long> t,
                            std::size_t max_values) {
    OrderedJson j;
    j["window"] = report.window.str();
    j["count"] = report.values.size();
    const auto mg = report.min_gap();
    j["min_gap"] = mg ? OrderedJson(mg->get_str()) : OrderedJson(nullptr);
    if (t && *t >= 2) {
        const auto mt = report.min_t_gap(*t);
        j["t"] = *t;
        j["min_t_gap"] = mt ? OrderedJson(mt->get_str()) : OrderedJson(nullptr);
    }
    if (report.values.size() <= max_values) {
        OrderedJson vals = OrderedJson::array();
        for (const auto& v : report.values) vals.push_back(v.get_str());
        j["values"] = std::move(vals);
    } else {
        j["values_suppressed"] = true;
    }
    return j;
}

OrderedJson certificate_json(const GapCertificate& cert) {
    OrderedJson j;
    j["type"] = "difference_collision";
    j["alpha"] = rational_str(cert.alpha);
    j["L"] = cert.subwindow_length.get_str();
    j["window"] = cert.window.str();
    j["couples"] = OrderedJson::array(
        {OrderedJson::array({cert.a.get_str(), cert.a_lo.get_str()}),
         OrderedJson::array({cert.b.get_str(), cert.b_lo.get_str()})});
    j["common_difference"] = cert.common_difference.get_str();
    j["products"] =
        OrderedJson::array({cert.product_first.get_str(), cert.product_second.get_str()});
    j["product_gap"] = cert.product_gap().get_str();
    j["pair_bound"] = cert.pair_bound().get_str();
    j["alpha_bound"] = rational_str(cert.alpha_bound());
    j["within_subwindow_pairs"] = cert.within_subwindow_pairs.get_str();
    j["verified"] = cert.verify();
    return j;
}

OrderedJson certificate_json(const ClusterCertificate& cert) {
    OrderedJson j;
    j["type"] = "sum_cluster";
    j["alpha"] = rational_str(cert.alpha);
    j["t"] = cert.t;
    j["L"] = cert.window_length.get_str();
    j["window"] = cert.window.str();
    j["sum"] = cert.sum.get_str();
    OrderedJson pairs = OrderedJson::array();
    for (const auto& [x, y] : cert.pairs)
        pairs.push_back(OrderedJson::array({x.get_str(), y.get_str()}));
    j["pairs"] = std::move(pairs);
    OrderedJson prods = OrderedJson::array();
    for (const auto& p : cert.products) prods.push_back(p.get_str());
    j["products"] = std::move(prods);
    j["span"] = cert.span().get_str();
    j["span_bound"] = Integer(cert.window_length * cert.window_length).get_str();
    j["alpha_bound"] = rational_str(cert.alpha_bound());
    j["pair_sum_count"] = cert.pair_sum_count.get_str();
    j["verified"] = cert.verify();
    return j;
}

OrderedJson theorem5_json(const Theorem5Report& report) {
    OrderedJson j;
    j["alpha"] = rational_str(report.alpha);
    j["T"] = report.t_cap.get_str();
    j["best_d"] = report.best_d.get_str();
    j["class_size"] = report.class_size.get_str();
    j["quotient_size"] = report.quotient_size.get_str();
    j["bound"] = rational_str(report.bound);
    j["intermediate_bound"] = rational_str(report.intermediate_bound);
    j["pass"] = report.pass;
    return j;
}

OrderedJson close_quotients_json(const CloseQuotientPair& pair) {
    OrderedJson j;
    j["alpha"] = rational_str(pair.alpha);
    j["low"] = rational_str(pair.low);
    j["high"] = rational_str(pair.high);
    j["low_witness"] = OrderedJson::array({pair.low_num.get_str(), pair.low_den.get_str()});
    j["high_witness"] = OrderedJson::array({pair.high_num.get_str(), pair.high_den.get_str()});
    j["distance"] = rational_str(pair.distance);
    j["distance_bound"] = rational_str(pair.distance_bound);
    j["product_gap"] = pair.product_gap.get_str();
    j["gap_bound"] = rational_str(pair.gap_bound);
    j["bounds_hold"] = pair.bounds_hold;
    return j;
}

}  // namespace prodgaps
