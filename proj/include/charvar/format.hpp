#pragma once

#include <string>
#include <vector>

#include "charvar/poly.hpp"
#include "charvar/repring.hpp"

namespace charvar::format {

/// Compact single-token rendering, e.g. "q^4+q^3-q^2-q" (safe in CSV cells).
std::string poly_compact(const Poly& p);

/// LaTeX rendering, e.g. "q^{4}+q^{3}-q^{2}-q".
std::string poly_latex(const Poly& p);

/// Little-endian base-10 coefficient strings (index = degree); empty for 0.
std::vector<std::string> poly_coeff_strings(const Poly& p);

/// Inverse of poly_coeff_strings; throws std::invalid_argument on bad input.
Poly poly_from_coeff_strings(const std::vector<std::string>& coeffs);

}  // namespace charvar::format
