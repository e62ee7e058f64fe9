#include <doctest.h>

#include "charvar/moduli.hpp"
#include "charvar/recursion.hpp"
#include "oracle.hpp"

using namespace charvar;
using namespace charvar::moduli;

namespace {
const Poly q = Poly::var();
const Poly q2 = q * q;
const Poly q3 = q2 * q;
}  // namespace

TEST_SUITE_BEGIN("moduli");

TEST_CASE("holonomy parsing") {
    CHECK(parse_holonomy("Id") == HolonomyClass::Id);
    CHECK(parse_holonomy("Parabolic") == HolonomyClass::Parabolic);
    CHECK(!parse_holonomy("bogus").has_value());
    CHECK(to_string(HolonomyClass::JMinus) == "JMinus");
}

TEST_CASE("genus-1 moduli spaces") {
    CHECK(moduli_epoly(1, HolonomyClass::MinusId) == Poly(1));
    CHECK(moduli_epoly(1, HolonomyClass::Parabolic) == q2 + q + Poly(1));
    CHECK(moduli_epoly(1, HolonomyClass::JMinus) == q2);
    CHECK(moduli_epoly(1, HolonomyClass::JPlus) == q2 - Poly(2) * q);
    CHECK(moduli_epoly(1, HolonomyClass::Id) == q2 + Poly(1));
}

TEST_CASE("reducible locus") {
    const auto r1 = reducible_locus(1);
    CHECK(r1.r3 == Poly(1));
    CHECK(r1.r4 == (q2 - Poly(1)) * (q + Poly(1)));
    CHECK(r1.mred == q2 + Poly(1));
    CHECK(r1.total == reducible_total_closed_form(1));
    CHECK(r1.r2.is_zero());  // (q^(2g-1) - q) vanishes at g = 1

    for (unsigned g = 2; g <= 10; ++g) {
        const auto r = reducible_locus(g);
        CHECK(r.r3 == Poly(1));
        CHECK(r.total == r.r1 + r.r2 + r.r3 + r.r4);
        CHECK(r.total == reducible_total_closed_form(g));
    }
}

TEST_CASE("pipeline equals closed forms") {
    for (unsigned g = 1; g <= 8; ++g)
        for (auto c : {HolonomyClass::Id, HolonomyClass::MinusId, HolonomyClass::JPlus,
                       HolonomyClass::JMinus, HolonomyClass::Parabolic}) {
            CAPTURE(g);
            CAPTURE(to_string(c));
            CHECK(moduli_epoly(g, c) == moduli_epoly_closed_form(g, c));
        }
}

TEST_CASE("closed forms by independent integer evaluation") {
    // e(M_Id) at sample points, using the reducible-locus pipeline numerically
    for (long x : {2L, 3L, 7L}) {
        const mpz_class xm(x);
        for (unsigned g : {2U, 5U, 11U}) {
            const GenusVector v = recursion::closed_form(g);
            const auto red = reducible_locus(g);
            const mpz_class pgl = xm * xm * xm - xm;
            const mpz_class irr_num = v.e0.eval(xm) - red.total.eval(xm);
            CHECK(irr_num % pgl == 0);
            CHECK(moduli_epoly(g, HolonomyClass::Id).eval(xm) ==
                  irr_num / pgl + red.mred.eval(xm));
        }
    }
}

TEST_CASE("euler characteristics") {
    CHECK(euler_characteristic(2, HolonomyClass::Id) == 5);
    CHECK(euler_characteristic(2, HolonomyClass::MinusId) == -2);
    CHECK(euler_characteristic(2, HolonomyClass::JPlus) == -4);
    CHECK(euler_characteristic(2, HolonomyClass::JMinus) == 4);
    for (unsigned g = 2; g <= 8; ++g) {
        CHECK(euler_characteristic(g, HolonomyClass::Parabolic) == 0);
        for (auto c : {HolonomyClass::Id, HolonomyClass::MinusId, HolonomyClass::JPlus,
                       HolonomyClass::JMinus})
            CHECK(euler_characteristic(g, c) == euler_characteristic_closed_form(g, c));
    }
    CHECK_THROWS_AS(euler_characteristic(1, HolonomyClass::Id), std::invalid_argument);
}

TEST_CASE("dimension and component count") {
    CHECK(dimension_and_components(2, HolonomyClass::MinusId) == std::pair<int, mpz_class>{6, 1});
    CHECK(dimension_and_components(2, HolonomyClass::JPlus) == std::pair<int, mpz_class>{8, 1});
    CHECK(dimension_and_components(3, HolonomyClass::Parabolic) ==
          std::pair<int, mpz_class>{14, 1});
    for (unsigned g = 2; g <= 7; ++g) {
        CHECK(dimension_and_components(g, HolonomyClass::Id).first == 6 * static_cast<int>(g) - 6);
        CHECK(dimension_and_components(g, HolonomyClass::JMinus).first ==
              6 * static_cast<int>(g) - 4);
    }
}

TEST_CASE("Hausel relation") {
    // g=1: q^2 + (q+1) * 1 = q^2+q+1
    CHECK(moduli_epoly(1, HolonomyClass::JMinus) +
              (q + Poly(1)) * moduli_epoly(1, HolonomyClass::MinusId) ==
          moduli_epoly(1, HolonomyClass::Parabolic));
    for (unsigned g : {1U, 2U, 5U, 9U}) CHECK(verify_hausel_relation(g).all_passed());
}

TEST_CASE("parabolic Hodge monodromy") {
    const Z2Rep hm1 = parabolic_hodge_monodromy(1);
    CHECK(hm1 == Z2Rep{q2 + q + Poly(1), Poly()});
    for (unsigned g = 1; g <= 8; ++g) {
        const Z2Rep hm = parabolic_hodge_monodromy(g);
        CHECK(hm.n.is_zero());
        CHECK(hm.t == moduli_epoly(g, HolonomyClass::Parabolic));
    }
}

TEST_CASE("representation space identities") {
    for (unsigned g = 1; g <= 8; ++g) {
        const GenusVector v = recursion::closed_form(g);
        const Poly parab = v.a + v.b;
        CHECK(v.e0 + (q - Poly(1)) * v.e2 == q * parab + pow(q2 - q, 2UL * g));
        CHECK(v.e1 + (q - Poly(1)) * v.e3 == q * parab);
    }
}

TEST_CASE("repspace_epoly selector") {
    const GenusVector v = recursion::closed_form(3);
    CHECK(repspace_epoly(3, HolonomyClass::Id) == v.e0);
    CHECK(repspace_epoly(3, HolonomyClass::Parabolic) == v.a + v.b);
    CHECK(repspace_epoly(1, HolonomyClass::MinusId) == q3 - q);
}

TEST_CASE("verify_moduli passes") {
    const Report r = verify_moduli(6);
    for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name, ": ", c.detail);
}

TEST_SUITE_END();
