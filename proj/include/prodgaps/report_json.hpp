#pragma once

// JSON renderings of reports and certificates. Arbitrary-precision integers
// are emitted as decimal strings, rationals as "num/den" strings.

#include <json.hpp>

#include "prodgaps/blocks.hpp"
#include "prodgaps/gap_finders.hpp"
#include "prodgaps/products.hpp"
#include "prodgaps/quotients.hpp"
#include "prodgaps/sidon.hpp"

namespace prodgaps {

using OrderedJson = nlohmann::ordered_json;

OrderedJson spec_json(const BlockFamilySpec& spec);
OrderedJson gap_report_json(const GapReport& report, std::optional<long> t,
                            std::size_t max_values);
OrderedJson certificate_json(const GapCertificate& cert);
OrderedJson certificate_json(const ClusterCertificate& cert);
OrderedJson theorem5_json(const Theorem5Report& report);
OrderedJson close_quotients_json(const CloseQuotientPair& pair);

}  // namespace prodgaps
