#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "bandlab/band_set.hpp"
#include "bandlab/distortion.hpp"

namespace bandlab {

using json = nlohmann::json;

/// Deterministic serialization: keys sorted, floats rendered with %.17g,
/// two-space indentation.  Throws on non-finite numbers.
std::string canonical_dump(const json& j);

/// FNV-1a hash of the canonical form, as a fixed-width hex string.
std::string canonical_hash(const json& j);

json band_set_to_json(const BandSet& set);
BandSet band_set_from_json(const json& j);

json distortion_report_to_json(const DistortionReport& report);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace bandlab
