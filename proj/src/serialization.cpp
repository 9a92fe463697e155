#include "tnpoly/serialization.hpp"

#include <stdexcept>

namespace tnpoly {

namespace {

std::vector<Rational> rationals_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) {
        throw std::invalid_argument(std::string(what) + ": expected a JSON array");
    }
    std::vector<Rational> values;
    values.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string()) {
            throw std::invalid_argument(std::string(what) + ": expected rational strings");
        }
        values.push_back(parse_rational(item.get<std::string>()));
    }
    return values;
}

}  // namespace

nlohmann::json to_json(const Spectrum& sigma) {
    nlohmann::json j = nlohmann::json::array();
    for (const Rational& value : sigma.values()) {
        j.push_back(format_rational(value));
    }
    return j;
}

Spectrum spectrum_from_json(const nlohmann::json& j) {
    return Spectrum(rationals_from_json(j, "spectrum"));
}

nlohmann::json to_json(const PartitionCertificate& certificate) {
    nlohmann::json j = nlohmann::json::array();
    for (const Spectrum& part : certificate.parts) {
        j.push_back(to_json(part));
    }
    return j;
}

PartitionCertificate certificate_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("certificate: expected a nonempty JSON array of spectra");
    }
    PartitionCertificate certificate;
    certificate.parts.reserve(j.size());
    for (const auto& part : j) {
        certificate.parts.push_back(spectrum_from_json(part));
    }
    return certificate;
}

nlohmann::json to_json(const NonnegMatrix& matrix) {
    nlohmann::json j = nlohmann::json::array();
    for (const Rational& entry : matrix.entries()) {
        j.push_back(format_rational(entry));
    }
    return j;
}

NonnegMatrix matrix_from_json(const nlohmann::json& j) {
    std::vector<Rational> entries = rationals_from_json(j, "matrix");
    std::size_t order = 0;
    while (order * order < entries.size()) {
        ++order;
    }
    if (order * order != entries.size()) {
        throw std::invalid_argument("matrix: entry count is not a perfect square");
    }
    return NonnegMatrix(order, std::move(entries));
}

}  // namespace tnpoly
