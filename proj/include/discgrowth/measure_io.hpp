#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "discgrowth/verify.hpp"

namespace discgrowth {

// JSON schemas (field names are part of the interface):
//   zero sequence: { "zeros": [ {"re", "im", "multiplicity"} ] }
//   measure:       { "s", "disc_atoms": [ {"re","im","weight"} ],
//                    "boundary_atoms": [ {"theta","mass"} ],
//                    "boundary_density": [ {"theta_start","theta_end","value"} ] }

struct MeasureFile {
    DiscMeasure mu;
    int s = 0;
};

nlohmann::json zeros_to_json(const ZeroSequence& zeros);
ZeroSequence zeros_from_json(const nlohmann::json& j);

nlohmann::json measure_to_json(const DiscMeasure& mu, int s);
MeasureFile measure_from_json(const nlohmann::json& j);

/// Distinguishes the two schemas by the presence of "zeros".
bool looks_like_zero_sequence(const nlohmann::json& j);

nlohmann::json fit_to_json(const GrowthFit& fit);
nlohmann::json report_to_json(const VerificationReport& report);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace discgrowth
