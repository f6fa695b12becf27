#pragma once

#include "dfnls/krein.hpp"

#include <json.hpp>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace dfnls {

// All artifact writers are deterministic: fixed key order, shortest
// round-trip float formatting, no timestamps. The run manifest is the single
// exception (its timestamp field).

nlohmann::ordered_json profile_json(const WaveProfile& wave);
nlohmann::ordered_json spectrum_json(const SpectrumReport& report, int keep = 12);
nlohmann::ordered_json krein_json(const KreinReport& report);

// Rebuild a profile from profile_json output.
WaveProfile profile_from_json(const nlohmann::ordered_json& j);

// Columns x, phi with 17 significant digits.
void write_profile_csv(std::ostream& out, const WaveProfile& wave);

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::string output_dir;
    std::string timestamp;  // ISO-8601 UTC
    std::vector<std::string> artifact_paths;
};

nlohmann::ordered_json manifest_json(const RunManifest& manifest);

std::string iso8601_utc_now();

// Full-precision decimal rendering used by every CSV column.
std::string format_full(double value);

}  // namespace dfnls
