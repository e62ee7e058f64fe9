#include "charvar/mirror.hpp"

#include <stdexcept>
#include <vector>

#include "charvar/parallel.hpp"
#include "charvar/recursion.hpp"

namespace charvar::mirror {

namespace {

const Poly q = Poly::var();
const Poly q2 = q * q;
const Poly q3 = q2 * q;

Poly c(long n) { return Poly(n); }

const mpq_class kHalf(1, 2);

// 2^n as an integer polynomial constant.
Poly two_pow(unsigned long n) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, n);
    return Poly(v);
}

void require_genus(unsigned g, const char* where) {
    if (g < 1) throw std::invalid_argument(std::string(where) + ": genus must be >= 1");
}

// The b/c presentation of the five difference lines.
struct BcForm {
    Poly d0, d1, d2, d3, d4;
};

BcForm bc_form(const Poly& b, const Poly& cc) {
    return {q * cc + b, q * b + cc, b, cc, b + cc};
}

}  // namespace

MirrorCoeffs sl_coeffs(unsigned g) {
    require_genus(g, "sl_coeffs");
    const unsigned long e = 2UL * g - 1;
    const Poly fp = pow(q2 + q, e);
    const Poly fm = pow(q2 - q, e);
    const Poly gp = pow(q, e) * pow(q + c(1), e);  // = fp, kept as the displayed shape
    const Poly gm = pow(q, e) * pow(q - c(1), e);
    const Poly pre = two_pow(e);  // 2^(2g-1)

    MirrorCoeffs m;
    m.genus = g;
    m.a = halve(RatPoly(pow(q3 - q, e)) + kHalf * RatPoly(gp - gm));
    m.b = halve(RatPoly(pre * (fm - fp)) + kHalf * RatPoly(gp - gm));
    m.c = halve(RatPoly(pre * (fm + fp)) - kHalf * RatPoly(gp + gm));
    m.d = halve(RatPoly(pow(q2 - c(1), e)) - kHalf * RatPoly(gp + gm));

    const GenusVector v = recursion::closed_form(g);
    if (m.a != v.a)
        throw InvariantViolation("sl_coeffs: a^g != a~^g at g=" + std::to_string(g));
    if (m.d != v.b)
        throw InvariantViolation("sl_coeffs: d^g != b~^g at g=" + std::to_string(g));
    if (m.b + m.c != (two_pow(2UL * g) - c(1)) * fm)
        throw InvariantViolation("sl_coeffs: b+c != (2^(2g)-1)(q^2-q)^(2g-1) at g=" +
                                 std::to_string(g));
    return m;
}

MirrorDifferences differences(unsigned g) {
    require_genus(g, "differences");
    const unsigned long e = 2UL * g;
    const Poly fp = pow(q2 + q, e - 2);
    const Poly fm = pow(q2 - q, e - 2);
    const Poly scale = two_pow(e) - c(1);  // 2^(2g) - 1

    MirrorDifferences d;
    d.genus = g;
    d.d0 = halve(kHalf * RatPoly((q3 - q) * scale * (fm + fp)));
    d.d1 = halve(kHalf * RatPoly((q3 - q) * scale * (fm - fp)));
    d.d2 = halve(kHalf * RatPoly(scale * (fm * (q2 - q) - fp * (q2 + q))));
    d.d3 = halve(kHalf * RatPoly(scale * (fm * (q2 - q) + fp * (q2 + q))));
    d.d4 = scale * fm * (q2 - q);

    const MirrorCoeffs m = sl_coeffs(g);
    const BcForm bc = bc_form(m.b, m.c);
    const bool both_presentations = d.d0 == bc.d0 && d.d1 == bc.d1 && d.d2 == bc.d2 &&
                                    d.d3 == bc.d3 && d.d4 == bc.d4;
    if (!both_presentations)
        throw InvariantViolation(
            "differences: binomial and b/c presentations disagree at g=" + std::to_string(g));
    return d;
}

Poly sl_repspace_epoly(unsigned g, moduli::HolonomyClass cls) {
    require_genus(g, "sl_repspace_epoly");
    const MirrorDifferences d = differences(g);
    const Poly pgl = moduli::repspace_epoly(g, cls);
    switch (cls) {
        case moduli::HolonomyClass::Id: return pgl + d.d0;
        case moduli::HolonomyClass::MinusId: return pgl + d.d1;
        case moduli::HolonomyClass::JPlus: return pgl + d.d2;
        case moduli::HolonomyClass::JMinus: return pgl + d.d3;
        case moduli::HolonomyClass::Parabolic: return pgl + d.d4;
    }
    throw std::invalid_argument("sl_repspace_epoly: unknown class");
}

Report verify_mirror(unsigned g_max, unsigned threads) {
    if (g_max < 1) throw std::invalid_argument("verify_mirror: g_max must be >= 1");
    Report report;

    struct PerGenus {
        bool coeffs_ok = true;
        bool linear_ok = true;
        bool swap_ok = true;
        bool stringy_ok = true;
        bool reconstruction_ok = true;
        std::string detail;
    };
    std::vector<PerGenus> per(g_max + 1);

    parallel_for(g_max, thread_budget(threads), [&](std::size_t i) {
        const unsigned g = static_cast<unsigned>(i) + 1;
        PerGenus& out = per[g];
        MirrorCoeffs m;
        MirrorDifferences d;
        try {
            m = sl_coeffs(g);
            d = differences(g);  // asserts dual presentations + coefficient identities
        } catch (const InvariantViolation& e) {
            out.coeffs_ok = false;
            out.detail = e.what();
            return;
        } catch (const NotIntegralError& e) {
            out.coeffs_ok = false;
            out.detail = e.what();
            return;
        }

        out.linear_ok = d.d0 + (q - c(1)) * d.d2 == q * d.d4 &&
                        d.d1 + (q - c(1)) * d.d3 == q * d.d4;

        // Recompute the differences from the coefficient set with b and c
        // exchanged: d0<->d1 and d2<->d3 must swap while d4 stays fixed.
        const BcForm swapped = bc_form(m.c, m.b);
        out.swap_ok = swapped.d0 == d.d1 && swapped.d1 == d.d0 && swapped.d2 == d.d3 &&
                      swapped.d3 == d.d2 && swapped.d4 == d.d4;

        try {
            const Poly moduli_diff = exact_div(d.d1, q3 - q);
            const unsigned long e = 2UL * g;
            const Poly stringy = halve(
                kHalf * RatPoly((two_pow(e) - c(1)) * pow(q, e - 2) *
                                (pow(q - c(1), e - 2) - pow(q + c(1), e - 2))));
            out.stringy_ok = moduli_diff == stringy;
        } catch (const NotDivisibleError& e) {
            out.stringy_ok = false;
            out.detail = e.what();
        }

        using moduli::HolonomyClass;
        out.reconstruction_ok =
            sl_repspace_epoly(g, HolonomyClass::Parabolic) -
                    moduli::repspace_epoly(g, HolonomyClass::Parabolic) ==
                (two_pow(2UL * g) - c(1)) * pow(q2 - q, 2UL * g - 1) &&
            sl_repspace_epoly(g, HolonomyClass::MinusId) ==
                moduli::repspace_epoly(g, HolonomyClass::MinusId) + d.d1;
    });

    auto collect = [&](auto member, const char* name, const char* anchor) {
        bool ok = true;
        std::string detail;
        for (unsigned g = 1; g <= g_max; ++g) {
            if (!(per[g].*member)) {
                ok = false;
                detail = per[g].detail.empty() ? "first failure at g=" + std::to_string(g)
                                               : per[g].detail;
                break;
            }
        }
        report.add(name, anchor, ok, detail);
    };

    collect(&PerGenus::coeffs_ok, "mirror coefficients",
            "a^g = a~^g, d^g = b~^g, b+c = (2^(2g)-1)(q^2-q)^(2g-1); five difference lines in both presentations");
    collect(&PerGenus::linear_ok, "difference linear relations",
            "d0 + (q-1)d2 = q d4 and d1 + (q-1)d3 = q d4");
    collect(&PerGenus::swap_ok, "b<->c swap symmetry",
            "swapping b^g and c^g exchanges d0<->d1 and d2<->d3, fixing d4");
    collect(&PerGenus::stringy_ok, "stringy difference for -Id",
            "d1/(q^3-q) = (2^(2g)-1) q^(2g-2) ((q-1)^(2g-2)-(q+1)^(2g-2))/2");
    collect(&PerGenus::reconstruction_ok, "reconstructed SL values",
            "e_i = e~_i + d_i; parabolic gap = (2^(2g)-1)(q^2-q)^(2g-1)");

    return report;
}

}  // namespace charvar::mirror
