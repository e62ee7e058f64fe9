#pragma once

#include <json.hpp>

#include "charvar/format.hpp"
#include "charvar/poly.hpp"
#include "charvar/repring.hpp"

namespace charvar::json_io {

/// Polynomials serialize as ordered base-10 coefficient strings, index =
/// degree; decimal strings survive arbitrary precision in JSON.
inline nlohmann::json to_json(const Poly& p) {
    return nlohmann::json(format::poly_coeff_strings(p));
}

inline Poly poly_from_json(const nlohmann::json& j) {
    return format::poly_from_coeff_strings(j.get<std::vector<std::string>>());
}

inline nlohmann::json to_json(const Z2Rep& r) {
    return nlohmann::json{{"T", to_json(r.t)}, {"N", to_json(r.n)}};
}

inline Z2Rep z2rep_from_json(const nlohmann::json& j) {
    return {poly_from_json(j.at("T")), poly_from_json(j.at("N"))};
}

inline nlohmann::json to_json(const Klein4Rep& r) {
    return nlohmann::json{
        {"T", to_json(r.t)}, {"S2", to_json(r.s2)}, {"Sm2", to_json(r.sm2)}, {"S0", to_json(r.s0)}};
}

inline Klein4Rep klein4_from_json(const nlohmann::json& j) {
    return {poly_from_json(j.at("T")), poly_from_json(j.at("S2")), poly_from_json(j.at("Sm2")),
            poly_from_json(j.at("S0"))};
}

}  // namespace charvar::json_io
