#pragma once

#include <json.hpp>

#include "gpsw/analysis.hpp"
#include "gpsw/gps.hpp"
#include "gpsw/verifier.hpp"

namespace gpsw {

// {check, b, m, L, predicted, observed, verdict, witness_index?,
//  witness_factor?, elapsed_ms}. `stable` drops elapsed_ms so identical
// parameters give byte-identical output.
nlohmann::ordered_json to_json(const VerificationReport& r, bool stable = false);
nlohmann::ordered_json to_json(const std::vector<VerificationReport>& reports, bool stable = false);

nlohmann::ordered_json to_json(const InferenceResult& r);
nlohmann::ordered_json to_json(const PalindromeCensus& c);
nlohmann::ordered_json to_json(const std::optional<Overlap>& o);

}  // namespace gpsw
