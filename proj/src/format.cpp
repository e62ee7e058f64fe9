#include "charvar/format.hpp"

#include <sstream>
#include <stdexcept>

namespace charvar::format {

namespace {

std::string render(const Poly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = p.degree(); d >= 0; --d) {
        const mpz_class& c = p.coeff(static_cast<std::size_t>(d));
        if (c == 0) continue;
        const mpz_class a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? "-" : "+");
        }
        first = false;
        if (d == 0 || a != 1) os << a.get_str();
        if (d >= 1) {
            os << "q";
            if (d >= 2) {
                if (latex)
                    os << "^{" << d << "}";
                else
                    os << "^" << d;
            }
        }
    }
    return os.str();
}

}  // namespace

std::string poly_compact(const Poly& p) { return render(p, false); }

std::string poly_latex(const Poly& p) { return render(p, true); }

std::vector<std::string> poly_coeff_strings(const Poly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

Poly poly_from_coeff_strings(const std::vector<std::string>& coeffs) {
    std::vector<mpz_class> out;
    out.reserve(coeffs.size());
    for (const auto& s : coeffs) {
        mpz_class c;
        if (s.empty() || mpz_set_str(c.get_mpz_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("bad coefficient string: '" + s + "'");
        out.push_back(c);
    }
    return Poly::from_coeffs(std::move(out));
}

}  // namespace charvar::format
