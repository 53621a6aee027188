#pragma once

#include <string>

#include "json.hpp"

#include "btq/quotient.hpp"
#include "btq/verify.hpp"

namespace btq {

nlohmann::json graph_to_json(const QuotientGraph& g);
QuotientGraph graph_from_json(const nlohmann::json& j);

// one edge record per bundle, multiplicity in the label
std::string graph_to_dot(const QuotientGraph& g);

// chain rows with frontier ellipses, remaining bundles listed below;
// multiplicities >= 2 appear as "xK"
std::string graph_to_ascii(const QuotientGraph& g);

nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace btq
