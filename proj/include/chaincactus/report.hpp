#pragma once

#include "chaincactus/chain_model.hpp"
#include "chaincactus/extremal.hpp"
#include "chaincactus/polynomial.hpp"

#include "json.hpp"

#include <string>

namespace chaincactus {

using Json = nlohmann::ordered_json;

// Big integers are always decimal strings so no digits are lost downstream.

Json poly_to_json(const UniPoly& p);
/// Throws std::invalid_argument on anything but an array of decimal strings.
UniPoly poly_from_json(const Json& j);

Json spec_to_json(const ChainSpec& spec);
/// {"cycle_sizes":[...],"positions":[...]}, validated on the way in.
ChainSpec spec_from_json(const Json& j);

Json entry_to_json(const SweepEntry& e);
Json verdict_to_json(const Verdict& v);
Json report_to_json(const SweepReport& r);

/// Header "positions,psi,alpha,mis_count"; positions joined with ';'.
std::string report_to_csv(const SweepReport& r);

} // namespace chaincactus
