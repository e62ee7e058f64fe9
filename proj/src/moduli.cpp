#include "charvar/moduli.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "charvar/parallel.hpp"
#include "charvar/recursion.hpp"

namespace charvar::moduli {

namespace {

const Poly q = Poly::var();
const Poly q2 = q * q;
const Poly q3 = q2 * q;

Poly c(long n) { return Poly(n); }

const mpq_class kHalf(1, 2);

void require_genus(unsigned g, unsigned minimum, const char* where) {
    if (g < minimum)
        throw std::invalid_argument(std::string(where) + ": genus must be >= " +
                                    std::to_string(minimum));
}

}  // namespace

std::string to_string(HolonomyClass c) {
    switch (c) {
        case HolonomyClass::Id: return "Id";
        case HolonomyClass::MinusId: return "MinusId";
        case HolonomyClass::JPlus: return "JPlus";
        case HolonomyClass::JMinus: return "JMinus";
        case HolonomyClass::Parabolic: return "Parabolic";
    }
    return "?";
}

std::optional<HolonomyClass> parse_holonomy(const std::string& name) {
    if (name == "Id") return HolonomyClass::Id;
    if (name == "MinusId") return HolonomyClass::MinusId;
    if (name == "JPlus") return HolonomyClass::JPlus;
    if (name == "JMinus") return HolonomyClass::JMinus;
    if (name == "Parabolic") return HolonomyClass::Parabolic;
    return std::nullopt;
}

ReducibleLocusBreakdown reducible_locus(unsigned g) {
    require_genus(g, 1, "reducible_locus");
    const unsigned long e = 2UL * g;
    const Poly pm = pow(q - c(1), e - 1);  // (q-1)^(2g-1)
    const Poly pp = pow(q + c(1), e - 1);

    ReducibleLocusBreakdown r;
    r.r1 = halve(kHalf * RatPoly((q3 - q) * (pm + pp))) - q2;
    r.r2 = (q + c(1)) * (pow(q, e - 1) - q) * (pow(q - c(1), e) - c(1));
    r.r3 = c(1);
    r.r4 = (pow(q, e) - c(1)) * (q + c(1));
    r.total = r.r1 + r.r2 + r.r3 + r.r4;
    r.mred = halve(kHalf * RatPoly(pow(q - c(1), e) + pow(q + c(1), e)));
    return r;
}

Poly reducible_total_closed_form(unsigned g) {
    require_genus(g, 1, "reducible_total_closed_form");
    const unsigned long e = 2UL * g;
    const RatPoly inner = kHalf * RatPoly(pow(q + c(1), e - 1) - pow(q - c(1), e - 1)) +
                          RatPoly(pow(q, e - 2) + (q - c(1)) * pow(q2 - q, e - 2));
    return halve(RatPoly(q3 - q) * inner);
}

Poly repspace_epoly(unsigned g, HolonomyClass c) {
    require_genus(g, 1, "repspace_epoly");
    const GenusVector v = recursion::closed_form(g);
    switch (c) {
        case HolonomyClass::Id: return v.e0;
        case HolonomyClass::MinusId: return v.e1;
        case HolonomyClass::JPlus: return v.e2;
        case HolonomyClass::JMinus: return v.e3;
        case HolonomyClass::Parabolic: return v.a + v.b;  // fibre e(Z4bar_lambda)
    }
    throw std::invalid_argument("repspace_epoly: unknown class");
}

Poly moduli_epoly(unsigned g, HolonomyClass c) {
    require_genus(g, 1, "moduli_epoly");
    const GenusVector v = recursion::closed_form(g);
    switch (c) {
        case HolonomyClass::MinusId: return exact_div(v.e1, q3 - q);
        case HolonomyClass::JPlus: return exact_div(v.e2, q);
        case HolonomyClass::JMinus: return exact_div(v.e3, q);
        case HolonomyClass::Parabolic: return exact_div(v.a + v.b, q - Poly(1));
        case HolonomyClass::Id: {
            const auto red = reducible_locus(g);
            return exact_div(v.e0 - red.total, q3 - q) + red.mred;
        }
    }
    throw std::invalid_argument("moduli_epoly: unknown class");
}

Poly moduli_epoly_closed_form(unsigned g, HolonomyClass c) {
    require_genus(g, 1, "moduli_epoly_closed_form");
    const unsigned long e = 2UL * g - 2;
    const Poly f3 = pow(q3 - q, e);
    const Poly f1 = pow(q2 - Poly(1), e);
    const Poly fp = pow(q2 + q, e);
    const Poly fm = pow(q2 - q, e);

    switch (c) {
        case HolonomyClass::Id: {
            const Poly gm = pow(q - Poly(1), e);
            const Poly gp = pow(q + Poly(1), e);
            const RatPoly r = RatPoly(f3 + f1 - q * fm - pow(q, e)) +
                              kHalf * RatPoly(pow(q, e + 1) * (gm + gp)) +
                              kHalf * RatPoly(q * ((q + Poly(1)) * gp + (q - Poly(1)) * gm));
            return halve(r);
        }
        case HolonomyClass::MinusId:
            return halve(RatPoly(f3 + f1) - kHalf * RatPoly(fp + fm));
        case HolonomyClass::JPlus:
            return halve(RatPoly((q2 - Poly(1)) * f3) +
                         kHalf * RatPoly(-(q * (q + Poly(1)) * fp) +
                                         (q - Poly(2)) * (q - Poly(1)) * fm));
        case HolonomyClass::JMinus:
            return halve(RatPoly((q2 - Poly(1)) * f3) +
                         kHalf * RatPoly((q + Poly(1)) * fp - (q - Poly(1)) * fm));
        case HolonomyClass::Parabolic:
            return (q2 + q) * f3 + (q + Poly(1)) * f1 - q * fm;
    }
    throw std::invalid_argument("moduli_epoly_closed_form: unknown class");
}

mpz_class euler_characteristic(unsigned g, HolonomyClass c) {
    require_genus(g, 2, "euler_characteristic");
    return moduli_epoly(g, c).eval(1);
}

mpz_class euler_characteristic_closed_form(unsigned g, HolonomyClass c) {
    require_genus(g, 2, "euler_characteristic_closed_form");
    mpz_class p;  // 2^(2g-3)
    mpz_ui_pow_ui(p.get_mpz_t(), 2, 2U * g - 3U);
    switch (c) {
        case HolonomyClass::Id: return 3 * p - 1;
        case HolonomyClass::MinusId: return -p;
        case HolonomyClass::JPlus: return -2 * p;
        case HolonomyClass::JMinus: return 2 * p;
        case HolonomyClass::Parabolic: return 0;
    }
    throw std::invalid_argument("euler_characteristic_closed_form: unknown class");
}

std::pair<int, mpz_class> dimension_and_components(unsigned g, HolonomyClass c) {
    require_genus(g, 2, "dimension_and_components");
    const Poly e = moduli_epoly(g, c);
    return {e.degree(), e.leading_coeff()};
}

Report verify_hausel_relation(unsigned g) {
    require_genus(g, 1, "verify_hausel_relation");
    Report report;
    const Poly lhs = moduli_epoly(g, HolonomyClass::JMinus) +
                     (q + c(1)) * moduli_epoly(g, HolonomyClass::MinusId);
    const Poly rhs = moduli_epoly(g, HolonomyClass::Parabolic);
    report.add("Hausel relation g=" + std::to_string(g),
               "e(M_J-) + (q+1) e(M_-Id) = e(M_lambda)", lhs == rhs,
               lhs == rhs ? "" : "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string());
    return report;
}

Z2Rep parabolic_hodge_monodromy(unsigned g) {
    require_genus(g, 1, "parabolic_hodge_monodromy");
    const GenusVector v = recursion::closed_form(g);
    return {exact_div(v.a + v.b, q - c(1)), Poly()};
}

Report verify_moduli(unsigned g_max, unsigned threads) {
    if (g_max < 1) throw std::invalid_argument("verify_moduli: g_max must be >= 1");
    Report report;

    struct PerGenus {
        bool divisions_ok = true;
        bool closed_forms_ok = true;
        bool reducible_ok = true;
        bool repspace_ids_ok = true;
        bool hausel_ok = true;
        bool parabolic_hm_ok = true;
        bool topology_ok = true;  // only meaningful for g >= 2
        std::string detail;
    };
    std::vector<PerGenus> per(g_max + 1);

    const std::array<HolonomyClass, 5> classes = {HolonomyClass::Id, HolonomyClass::MinusId,
                                                  HolonomyClass::JPlus, HolonomyClass::JMinus,
                                                  HolonomyClass::Parabolic};

    parallel_for(g_max, thread_budget(threads), [&](std::size_t i) {
        const unsigned g = static_cast<unsigned>(i) + 1;
        PerGenus& out = per[g];
        try {
            for (const auto cls : classes) {
                const Poly pipeline = moduli_epoly(g, cls);
                if (pipeline != moduli_epoly_closed_form(g, cls)) {
                    out.closed_forms_ok = false;
                    out.detail = "closed form mismatch for " + to_string(cls) +
                                 " at g=" + std::to_string(g);
                }
            }
        } catch (const NotDivisibleError& e) {
            out.divisions_ok = false;
            out.detail = e.what();
        } catch (const NotIntegralError& e) {
            out.closed_forms_ok = false;
            out.detail = e.what();
        }

        const auto red = reducible_locus(g);
        out.reducible_ok = red.total == reducible_total_closed_form(g);

        const GenusVector v = recursion::closed_form(g);
        const Poly parab = v.a + v.b;
        out.repspace_ids_ok =
            v.e0 + (q - c(1)) * v.e2 == q * parab + pow(q2 - q, 2UL * g) &&
            v.e1 + (q - c(1)) * v.e3 == q * parab;

        out.hausel_ok = verify_hausel_relation(g).all_passed();

        try {
            const Z2Rep hm = parabolic_hodge_monodromy(g);
            out.parabolic_hm_ok = hm.n.is_zero() && hm.t == moduli_epoly(g, HolonomyClass::Parabolic) &&
                                  hm.t == moduli_epoly_closed_form(g, HolonomyClass::Parabolic);
        } catch (const NotDivisibleError& e) {
            out.parabolic_hm_ok = false;
            out.detail = e.what();
        }

        if (g >= 2) {
            for (const auto cls : classes) {
                if (euler_characteristic(g, cls) != euler_characteristic_closed_form(g, cls))
                    out.topology_ok = false;
                const auto [dim, lead] = dimension_and_components(g, cls);
                const int expected_dim =
                    (cls == HolonomyClass::Id || cls == HolonomyClass::MinusId) ? 6 * static_cast<int>(g) - 6
                                                                                : 6 * static_cast<int>(g) - 4;
                if (dim != expected_dim || lead != 1) out.topology_ok = false;
            }
        }
    });

    auto collect = [&](auto member, const char* name, const char* anchor, unsigned g_min = 1) {
        bool ok = true;
        std::string detail;
        for (unsigned g = g_min; g <= g_max; ++g) {
            if (!(per[g].*member)) {
                ok = false;
                detail = per[g].detail.empty() ? "first failure at g=" + std::to_string(g)
                                               : per[g].detail;
                break;
            }
        }
        report.add(name, anchor, ok, detail);
    };

    collect(&PerGenus::divisions_ok, "stabilizer divisions exact",
            "e1/(q^3-q), e2/q, e3/q, (a+b)/(q-1), (e0-e(R))/(q^3-q) all exact");
    collect(&PerGenus::closed_forms_ok, "moduli pipeline vs closed forms",
            "division route = closed forms, e.g. e(M_Id) = (q^3-q)^(2g-2)+(q^2-1)^(2g-2)-q(q^2-q)^(2g-2)-q^(2g-2)+...");
    collect(&PerGenus::reducible_ok, "reducible locus sum",
            "e(R) = (q^3-q)(((q+1)^(2g-1)-(q-1)^(2g-1))/2 + q^(2g-2) + (q-1)(q^2-q)^(2g-2))");
    collect(&PerGenus::repspace_ids_ok, "representation space identities",
            "e0+(q-1)e2 = q e(Z4bar_lambda) + (q^2-q)^(2g) and e1+(q-1)e3 = q e(Z4bar_lambda)");
    collect(&PerGenus::hausel_ok, "Hausel relation", "e(M_J-) + (q+1) e(M_-Id) = e(M_lambda)");
    collect(&PerGenus::parabolic_hm_ok, "parabolic Hodge monodromy",
            "R(M_lambda) = ((q^2+q)(q^3-q)^(2g-2)+(q+1)(q^2-1)^(2g-2)-q(q^2-q)^(2g-2)) T");
    if (g_max >= 2)
        collect(&PerGenus::topology_ok, "Euler characteristics and dimensions",
                "chi = 3*2^(2g-3)-1, -2^(2g-3), -2^(2g-2), 2^(2g-2), 0; dim = 6g-6 / 6g-4 with one top component",
                2);

    return report;
}

}  // namespace charvar::moduli
