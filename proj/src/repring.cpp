#include "charvar/repring.hpp"

#include <sstream>

namespace charvar {

namespace {

void append_component(std::ostream& os, const Poly& c, const char* symbol, bool& first) {
    if (c.is_zero()) return;
    if (!first) os << " + ";
    os << "(" << c << ")*" << symbol;
    first = false;
}

}  // namespace

std::string Z2Rep::to_string() const {
    if (t.is_zero() && n.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    append_component(os, t, "T", first);
    append_component(os, n, "N", first);
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Z2Rep& r) { return os << r.to_string(); }

std::string Klein4Rep::to_string() const {
    if (t.is_zero() && s2.is_zero() && sm2.is_zero() && s0.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    append_component(os, t, "T", first);
    append_component(os, s2, "S2", first);
    append_component(os, sm2, "S-2", first);
    append_component(os, s0, "S0", first);
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Klein4Rep& r) { return os << r.to_string(); }

Z2Rep tensor_z2(const Z2Rep& x, const Z2Rep& y) {
    return {x.t * y.t + x.n * y.n, x.t * y.n + x.n * y.t};
}

Klein4Rep tensor_klein4(const Klein4Rep& x, const Klein4Rep& y) {
    return {x.t * y.t + x.s2 * y.s2 + x.sm2 * y.sm2 + x.s0 * y.s0,
            x.t * y.s2 + x.s2 * y.t + x.sm2 * y.s0 + x.s0 * y.sm2,
            x.t * y.sm2 + x.sm2 * y.t + x.s2 * y.s0 + x.s0 * y.s2,
            x.t * y.s0 + x.s0 * y.t + x.s2 * y.sm2 + x.sm2 * y.s2};
}

Z2Rep pushforward_to_z2(const Klein4Rep& x) {
    return {x.t + x.s0, x.s2 + x.sm2};
}

Poly e_over_three_punctures(const Z2Rep& x) {
    return (Poly::var() - Poly(3)) * x.t - Poly(2) * x.n;
}

Poly e_over_two_punctures(const Z2Rep& x) {
    return (Poly::var() - Poly(2)) * x.t - x.n;
}

std::pair<Poly, Poly> e_plus_minus_klein4(const Klein4Rep& x) {
    const Poly qm2 = Poly::var() - Poly(2);
    return {qm2 * x.t - (x.s2 + x.sm2 + x.s0), qm2 * x.s0 - (x.t + x.s2 + x.sm2)};
}

Poly e_fibration_generic(const Poly& invariant_part, const Poly& total, unsigned punctures) {
    const long ell = static_cast<long>(punctures);
    return (Poly::var() - Poly(1)) * invariant_part - Poly(ell - 1) * total;
}

}  // namespace charvar
