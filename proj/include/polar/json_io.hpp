#pragma once

#include <complex>
#include <string>

#include <nlohmann/json.hpp>

#include "polar/asymptotics.hpp"
#include "polar/certify.hpp"
#include "polar/config.hpp"
#include "polar/frames.hpp"
#include "polar/planar.hpp"
#include "polar/search.hpp"
#include "polar/signsum.hpp"

namespace polar {

using nlohmann::json;

void to_json(json& j, const Configuration& c);
/// {"dim": d, "vectors": [[...], ...]}; every vector must already be a unit vector.
void from_json(const json& j, Configuration& c);

void to_json(json& j, const MaxCertificate& c);
void to_json(json& j, const BoundsReport& r);
void to_json(json& j, const FrameOperator& a);
void to_json(json& j, const IsotropyReport& r);
void to_json(json& j, const UntfResult& r);
void to_json(json& j, const SignSumResult& r);
void to_json(json& j, const Prop3Check& r);
void to_json(json& j, const ConjectureReport& r);
void to_json(json& j, const PlanarEnergyReport& r);
void to_json(json& j, const ScanItem& r);
void to_json(json& j, const ScanReport& r);
void to_json(json& j, const SearchResult& r);

json complex_json(std::complex<double> z);

Configuration read_configuration(const std::string& path);

/// Compact serialization used for digests and byte comparisons.
std::string canonical_dump(const json& j);

/// 64-bit FNV-1a of a byte string, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace polar
