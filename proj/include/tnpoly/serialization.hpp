#pragma once

#include "tnpoly/spectra.hpp"

#include <json.hpp>

namespace tnpoly {

// Wire formats: spectra are JSON arrays of rational strings ("p/q"),
// certificates arrays of such arrays, matrices row-major arrays of rational
// strings. Parsing throws std::invalid_argument on malformed input.

nlohmann::json to_json(const Spectrum& sigma);
Spectrum spectrum_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PartitionCertificate& certificate);
PartitionCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NonnegMatrix& matrix);
NonnegMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace tnpoly
