#include "charvar/genus1.hpp"

namespace charvar::genus1 {

namespace {

const Poly q = Poly::var();
const Poly q2 = q * q;
const Poly q3 = q2 * q;
const Poly q4 = q3 * q;

Poly c(long n) { return Poly(n); }

}  // namespace

std::string to_string(Space s) {
    switch (s) {
        case Space::Z0: return "Z0";
        case Space::Z1: return "Z1";
        case Space::Z2: return "Z2";
        case Space::Z3: return "Z3";
        case Space::Z4: return "Z4";
        case Space::Z4bar: return "Z4bar";
        case Space::Z4barQuot: return "Z4barQuot";
    }
    return "?";
}

Poly StrataTable::total() const {
    Poly sum;
    for (const auto& e : entries) sum += (e.sign < 0 ? -e.value : e.value);
    return sum;
}

Z2Rep RepStrataTable::total() const {
    Z2Rep sum;
    for (const auto& e : entries) sum = sum + (e.sign < 0 ? -e.value : e.value);
    return sum;
}

StrataTable build_z0_strata() {
    StrataTable t;
    t.name = "Z0";
    t.space = Space::Z0;
    t.anchor = "e(Z0) = 2e(PGL(2,C)) - 1 + e(Z0'a) + e(Z0'b) = (q^3-q)(q+1)";
    t.entries = {
        {"A or B trivial: 2e(PGL(2,C)) - 1", +1, c(2) * (q3 - q) - c(1)},
        {"Z0''a = q^4-3q^3+q^2+3q", +1, q4 - c(3) * q3 + q2 + c(3) * q},
        {"Z0'''a = q^3-2q^2-q", +1, q3 - c(2) * q2 - q},
        {"Z0''''a = q^2", +1, q2},
        {"Z0'b = (q^2-1)(q-1)", +1, (q2 - c(1)) * (q - c(1))},
    };
    t.stated_total = (q3 - q) * (q + c(1));
    return t;
}

StrataTable build_z1_strata() {
    StrataTable t;
    t.name = "Z1";
    t.space = Space::Z1;
    t.anchor = "e(Z1) = e(PGL(2,C)/H) = e(PGL(2,C)) = q^3-q";
    t.entries = {{"single orbit PGL(2,C)/H", +1, q3 - q}};
    t.stated_total = q3 - q;
    return t;
}

StrataTable build_z2bar_strata() {
    StrataTable t;
    t.name = "Z2bar";
    t.space = Space::Z2;
    t.anchor = "e(Z2bar) = q((q-1)^2 - 1) = q^3-2q^2";
    t.entries = {{"C x ((C* x C* - 4 pts)/(Z2 x Z2))", +1, q * (pow(q - c(1), 2) - c(1))}};
    t.stated_total = q3 - c(2) * q2;
    return t;
}

StrataTable build_z3_slice_strata() {
    StrataTable t;
    t.name = "Z3.slice";
    t.space = Space::Z3;
    t.anchor = "e(S) = e(S^a) + e(S^b) + e(S^c) = q^2-q+1";
    t.entries = {
        {"S^a (a+d=0) = q-1", +1, q - c(1)},
        {"S^b (u=-1) = 2(q-1)", +1, c(2) * (q - c(1))},
        {"S^c (u != 0,-1) = (q-2)^2", +1, pow(q - c(2), 2)},
    };
    t.stated_total = q2 - q + c(1);
    return t;
}

StrataTable build_z3bar_strata() {
    StrataTable t;
    t.name = "Z3bar";
    t.space = Space::Z3;
    t.anchor = "e(Z3bar) = q^3";
    t.entries = {
        {"Z3bar' (tr B = 0) = (q-1)q", +1, (q - c(1)) * q},
        {"Z3bar'' (tr B != 0) = q(q^2-q+1)", +1, q * (q2 - q + c(1))},
    };
    t.stated_total = q3;
    return t;
}

StrataTable build_z3_strata() {
    StrataTable t;
    t.name = "Z3";
    t.space = Space::Z3;
    t.anchor = "e(Z3) = e(Z3') + e(Z3'') = (q^3-q)q^2";
    t.entries = {
        {"Z3' = (q-1)(q^3-q)", +1, (q - c(1)) * (q3 - q)},
        {"Z3'' = q(q^2-1)(q^2-q+1)", +1, q * (q2 - c(1)) * (q2 - q + c(1))},
    };
    t.stated_total = (q3 - q) * q2;
    return t;
}

StrataTable build_z4_strata() {
    StrataTable t;
    t.name = "Z4";
    t.space = Space::Z4;
    t.anchor =
        "e(Z4) = e(Z4^0)+e(Z4^1)+e(Z4^2)+e(Z4^3)-e(Z4^4)+e(Z4^5)+e(Z4^6)-e(Z4^7)-e(Z4^8)"
        " = (q^3-q)(q^3-2q^2-2)";
    const Poly p = q3 - q;
    t.entries = {
        {"Z4^0 = (q^3-q)(q-2)", +1, p * (q - c(2))},
        {"Z4^1 = (q^3-q)(q-2)", +1, p * (q - c(2))},
        {"Z4^2 = (q^3-q)(q-1)(q-3)", +1, p * (q - c(1)) * (q - c(3))},
        {"Z4^3 = (q^3-q)(q-1)(q-3)", +1, p * (q - c(1)) * (q - c(3))},
        {"Z4^4 = (q^3-q)(q-3)", -1, p * (q - c(3))},
        {"Z4^5 = (q^3-q)((q-1)(q-2)+1)", +1, p * ((q - c(1)) * (q - c(2)) + c(1))},
        {"Z4^6 = (q^3-q)(q+1)(q-2)^2", +1, p * (q + c(1)) * pow(q - c(2), 2)},
        {"Z4^7 = (q^3-q)((q-3)^2+(q-2))", -1, p * (pow(q - c(3), 2) + (q - c(2)))},
        {"Z4^8 = (q^3-q)((q-2)(q-2)-(q-3))", -1, p * ((q - c(2)) * (q - c(2)) - (q - c(3)))},
    };
    t.stated_total = p * (q3 - c(2) * q2 - c(2));
    return t;
}

RepStrataTable build_z4bar_strata() {
    RepStrataTable t;
    t.name = "Z4bar";
    t.space = Space::Z4bar;
    t.anchor = "R(Z4bar) = (q^3-1)T  over C-{0,1,-1}; R(Z4bar^i) = (q-1)R(S^i)";
    const Poly s = q - c(1);  // the C* stabilizer factor
    auto pure = [&](const char* label, int sign, const Poly& slice) {
        return RepStratumEntry{label, sign, Z2Rep{s * slice, Poly()}};
    };
    t.entries = {
        pure("Z4bar^0: (q-1)T", +1, c(1)),
        pure("Z4bar^1: (q-1)T", +1, c(1)),
        pure("Z4bar^2: 2(q-1)^2 T", +1, c(2) * (q - c(1))),
        pure("Z4bar^3: 2(q-1)^2 T", +1, c(2) * (q - c(1))),
        pure("Z4bar^4: 2(q-1)T", -1, c(2)),
        pure("Z4bar^5: (q-1)(q-2)T", +1, q - c(2)),
        pure("Z4bar^6: (q-1)(q+1)(q-2)T", +1, (q + c(1)) * (q - c(2))),
        pure("Z4bar^7: (q-1)(2q-5)T", -1, c(2) * q - c(5)),
        pure("Z4bar^8: (q-1)(q-4)T", -1, q - c(4)),
    };
    t.stated_total = {q3 - c(1), Poly()};
    return t;
}

RepStrataTable build_z4bar_quot_strata() {
    RepStrataTable t;
    t.name = "Z4barQuot";
    t.space = Space::Z4barQuot;
    t.anchor = "R(Z4bar/Z2) = q^3 T - N  over C-{2,-2}";
    const Z2Rep s01 = {q, c(-1)};
    const Z2Rep s23 = {pow(q - c(1), 2), pow(q - c(1), 2)};
    t.entries = {
        {"Z4bar^0/Z2 = qT - N", +1, s01},
        {"Z4bar^1/Z2 = qT - N", +1, s01},
        {"Z4bar^2/Z2 = (q-1)^2 T + (q-1)^2 N", +1, s23},
        {"Z4bar^3/Z2 = (q-1)^2 T + (q-1)^2 N", +1, s23},
        {"Z4bar^4/Z2 = (q-1)T + (q-1)N", -1, {q - c(1), q - c(1)}},
        {"Z4bar^5/Z2 = (q^2-q+1)T + (-2q+1)N", +1, {q2 - q + c(1), c(-2) * q + c(1)}},
        {"Z4bar^6/Z2 = (q+1)(q-2)qT - (q+1)(q-2)N", +1,
         {(q + c(1)) * (q - c(2)) * q, -(q + c(1)) * (q - c(2))}},
        {"Z4bar^7/Z2 = (q^2-3q+3)T + (q^2-4q+2)N", -1,
         {q2 - c(3) * q + c(3), q2 - c(4) * q + c(2)}},
        {"Z4bar^8/Z2 = (q^2-3q+1)T + (-2q+3)N", -1, {q2 - c(3) * q + c(1), c(-2) * q + c(3)}},
    };
    t.stated_total = {q3, c(-1)};
    return t;
}

std::vector<StrataTable> all_poly_tables() {
    return {build_z0_strata(),  build_z1_strata(), build_z2bar_strata(), build_z3_slice_strata(),
            build_z3bar_strata(), build_z3_strata(), build_z4_strata()};
}

std::vector<RepStrataTable> all_rep_tables() {
    return {build_z4bar_strata(), build_z4bar_quot_strata()};
}

Genus1Blocks blocks() {
    Genus1Blocks b;
    b.e0 = build_z0_strata().total();
    b.e1 = build_z1_strata().total();
    b.e2 = build_z2bar_strata().total();
    b.e3 = build_z3bar_strata().total();
    b.hm_z4bar = build_z4bar_strata().total();
    b.hm_z4bar_quot = build_z4bar_quot_strata().total();
    return b;
}

Report verify_genus1() {
    Report report;

    for (const auto& table : all_poly_tables()) {
        const Poly total = table.total();
        report.add("strata total " + table.name, table.anchor, total == table.stated_total,
                   "total = " + total.to_string());
    }
    for (const auto& table : all_rep_tables()) {
        const Z2Rep total = table.total();
        report.add("strata total " + table.name, table.anchor,
                   total == table.stated_total, "total = " + total.to_string());
    }

    const Poly e_z0 = build_z0_strata().total();
    const Poly e_z1 = build_z1_strata().total();
    const Poly e_z2bar = build_z2bar_strata().total();
    const Poly e_z2 = (q2 - c(1)) * e_z2bar;
    const Poly e_z3 = build_z3_strata().total();
    const Poly e_z4 = build_z4_strata().total();

    report.add("Z2 stabilizer orbit", "e(Z2) = e(GL(2,C)/U) e(Z2bar) = (q^3-q)(q^2-2q)",
               e_z2 == (q3 - q) * (q2 - c(2) * q), "e(Z2) = " + e_z2.to_string());

    const Poly e_slice = build_z3_slice_strata().total();
    const Poly e_z3bar = build_z3bar_strata().total();
    report.add("Z3bar'' from slice", "e(Z3bar'') = q e(S), e(S) = q^2-q+1",
               q * e_slice == build_z3bar_strata().entries[1].value,
               "e(S) = " + e_slice.to_string());
    report.add("Z3 total", "e(Z3) = e(Z3') + e(Z3'') = (q^3-q)q^2",
               e_z3 == (q3 - q) * q2 && e_z3bar == q3,
               "e(Z3) = " + e_z3.to_string() + ", e(Z3bar) = " + e_z3bar.to_string());

    const Poly full = e_z0 + e_z1 + e_z2 + e_z3 + e_z4;
    report.add("full space sum", "e(Z0)+e(Z1)+e(Z2)+e(Z3)+e(Z4) = e(PGL(2,C)^2) = (q^3-q)^2",
               full == pow(q3 - q, 2), "sum = " + full.to_string());

    const auto b = blocks();
    const Z2Rep pushed = {b.hm_z4bar_quot.t + b.hm_z4bar_quot.n, Poly()};
    report.add("Hodge monodromy pushforward", "R(Z4bar) = (c+d)T = (q^3-1)T where R(Z4bar/Z2) = cT+dN",
               b.hm_z4bar == pushed && pushed.t == q3 - c(1),
               "R(Z4bar) = " + b.hm_z4bar.to_string());
    report.add("parabolic fibre", "e(Z4bar_lambda) = (q-1)(q^2+q+1) = q^3-1",
               b.hm_z4bar.t == (q - c(1)) * (q2 + q + c(1)),
               "e(Z4bar_lambda) = " + b.hm_z4bar.t.to_string());
    const Poly e_z4bar = e_over_three_punctures(b.hm_z4bar);
    report.add("Z4bar total space", "e(Z4bar) = (q-3)(q^3-1) = q^4-3q^3-q+3",
               e_z4bar == q4 - c(3) * q3 - q + c(3), "e(Z4bar) = " + e_z4bar.to_string());
    const Poly e_z4bar_quot = e_over_two_punctures(b.hm_z4bar_quot);
    report.add("Z4bar/Z2 total space", "e(Z4bar/Z2) = (q-2)q^3 + 1 = q^4-2q^3+1",
               e_z4bar_quot == q4 - c(2) * q3 + c(1),
               "e(Z4bar/Z2) = " + e_z4bar_quot.to_string());

    return report;
}

}  // namespace charvar::genus1
