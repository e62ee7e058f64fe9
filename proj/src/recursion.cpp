#include "charvar/recursion.hpp"

#include <algorithm>
#include <sstream>

#include "charvar/parallel.hpp"
#include "charvar/repring.hpp"

namespace charvar {

PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs) {
    PolyMatrix out;
    for (std::size_t i = 0; i < PolyMatrix::kSize; ++i)
        for (std::size_t j = 0; j < PolyMatrix::kSize; ++j) {
            Poly acc;
            for (std::size_t k = 0; k < PolyMatrix::kSize; ++k)
                acc += lhs.at(i, k) * rhs.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

std::array<Poly, PolyMatrix::kSize> PolyMatrix::apply(const std::array<Poly, kSize>& v) const {
    std::array<Poly, kSize> out;
    for (std::size_t i = 0; i < kSize; ++i) {
        Poly acc;
        for (std::size_t k = 0; k < kSize; ++k) acc += at(i, k) * v[k];
        out[i] = acc;
    }
    return out;
}

namespace {

Poly minor_determinant(const std::vector<Poly>& m, std::size_t n) {
    if (n == 1) return m[0];
    Poly det;
    std::vector<Poly> sub((n - 1) * (n - 1));
    for (std::size_t col = 0; col < n; ++col) {
        if (m[col].is_zero()) continue;
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t k = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                sub[(i - 1) * (n - 1) + k++] = m[i * n + j];
            }
        }
        const Poly term = m[col] * minor_determinant(sub, n - 1);
        if (col % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

}  // namespace

Poly PolyMatrix::determinant() const {
    std::vector<Poly> m(entries_.begin(), entries_.end());
    return minor_determinant(m, kSize);
}

namespace recursion {

namespace {

const Poly q = Poly::var();
const Poly q2 = q * q;
const Poly q3 = q2 * q;
const Poly q4 = q3 * q;
const Poly q5 = q4 * q;
const Poly q6 = q5 * q;

Poly c(long n) { return Poly(n); }

// e(W4) for the connected-sum stratum whose holonomies multiply to a
// regular semisimple class: the tensor product of the two parabolic Hodge
// monodromies, pushed through the quotient fibration over C-{±2} and the
// trivial-monodromy fibration over C-{0,±1}, weighted by the invariant and
// anti-invariant parts of PGL(2,C)/D.
Poly glued_w4(const GenusVector& k, const GenusVector& h) {
    const Z2Rep t = tensor_z2({k.a, k.b}, {h.a, h.b});
    const Poly quot = e_over_two_punctures(t);                        // (q-2)A - B
    const Poly total = e_over_three_punctures({t.t + t.n, Poly()});   // (q-3)(A+B)
    return (q2 - q) * quot + q * total;
}

// q ( e(V5bar) - e(V5bar/Z2) ) for the fibre-product bundle of the two
// parabolic families, same e-map routing as glued_w4.
Poly glued_v5_defect(const GenusVector& k, const GenusVector& h) {
    const Z2Rep t = tensor_z2({k.a, k.b}, {h.a, h.b});
    const Poly quot = e_over_two_punctures(t);
    const Poly total = e_over_three_punctures({t.t + t.n, Poly()});
    return q * (total - quot);
}

// e(Z4bar^g/Z2) from the genus vector.
Poly quot_epoly(const GenusVector& v) { return e_over_two_punctures({v.a, v.b}); }

}  // namespace

GenusVector genus_zero_seed() { return {c(1), Poly(), Poly(), Poly(), Poly(), Poly(), 0}; }

GenusVector seed_from_blocks(const genus1::Genus1Blocks& blocks) {
    return {blocks.e0, blocks.e1, blocks.e2, blocks.e3,
            blocks.hm_z4bar_quot.t, blocks.hm_z4bar_quot.n, 1};
}

std::vector<std::string> invariant_failures(const GenusVector& v) {
    std::vector<std::string> failures;
    auto check_div = [&](const Poly& p, const Poly& d, const char* what) {
        try {
            exact_div(p, d);
        } catch (const NotDivisibleError& e) {
            failures.push_back(std::string(what) + ": " + e.what());
        }
    };
    check_div(v.e1, q3 - q, "e1 not divisible by q^3-q");
    check_div(v.e2, q, "e2 not divisible by q");
    check_div(v.e3, q, "e3 not divisible by q");
    check_div(v.a + v.b, q - c(1), "a+b not divisible by q-1");

    // Full-space decomposition: the semisimple stratum enters with its
    // stabilizer weights, e(Z4) = (q^2-q) e(Z4bar/Z2) + q e(Z4bar)
    //                           = (q^3-2q^2-q)a - 2q b.
    const Poly e_z4 = (q2 - q) * e_over_two_punctures({v.a, v.b}) +
                      q * e_over_three_punctures({v.a + v.b, Poly()});
    const Poly lhs = v.e0 + v.e1 + (q2 - c(1)) * (v.e2 + v.e3) + e_z4;
    const Poly rhs = pow(q3 - q, 2UL * v.genus);
    if (lhs != rhs)
        failures.push_back(
            "grand sum e0+e1+(q^2-1)(e2+e3)+e(Z4) = (q^3-q)^(2g) broken at g=" +
            std::to_string(v.genus) + ": lhs = " + lhs.to_string());
    return failures;
}

void assert_invariants(const GenusVector& v) {
    const auto failures = invariant_failures(v);
    if (failures.empty()) return;
    std::ostringstream os;
    os << "genus vector invariants broken at g=" << v.genus << ":";
    for (const auto& f : failures) os << "\n  " << f;
    throw InvariantViolation(os.str());
}

PolyMatrix matrix_M() {
    PolyMatrix m;

    m.at(0, 0) = q4 + q3 - q2 - q;
    m.at(0, 1) = q3 - q;
    m.at(0, 2) = q5 - c(2) * q4 - q3 + c(2) * q2;
    m.at(0, 3) = q5 - q3;
    m.at(0, 4) = q6 - c(2) * q5 - q4 + c(2) * q;
    m.at(0, 5) = c(-2) * q4 - q3 + c(2) * q2 + q;

    m.at(1, 0) = q3 - q;
    m.at(1, 1) = q4 + q3 - q2 - q;
    m.at(1, 2) = q5 - q3;
    m.at(1, 3) = q5 - c(2) * q4 - q3 + c(2) * q2;
    m.at(1, 4) = q6 - c(2) * q5 - q4 + c(2) * q;
    m.at(1, 5) = c(-2) * q4 - q3 + c(2) * q2 + q;

    m.at(2, 0) = q3 - c(2) * q2;
    m.at(2, 1) = q3;
    m.at(2, 2) = q5 + q4 - c(3) * q3 + c(3) * q2;
    m.at(2, 3) = q5 - c(3) * q3;
    m.at(2, 4) = q6 - c(2) * q5 - c(3) * q4 + c(4) * q3;
    m.at(2, 5) = c(-2) * q4 + c(2) * q3;

    m.at(3, 0) = q3;
    m.at(3, 1) = q3 - c(2) * q2;
    m.at(3, 2) = q5 - c(3) * q3;
    m.at(3, 3) = q5 + q4 - c(3) * q3 + c(3) * q2;
    m.at(3, 4) = q6 - c(2) * q5 - c(3) * q4 + c(4) * q3;
    m.at(3, 5) = c(-2) * q4 + c(2) * q3;

    m.at(4, 0) = q3;
    m.at(4, 1) = q3;
    m.at(4, 2) = q5 - c(3) * q3;
    m.at(4, 3) = q5 - c(3) * q3;
    m.at(4, 4) = q6 - c(2) * q5 - c(2) * q4 + c(4) * q3 + q2;
    m.at(4, 5) = c(-2) * q4;

    m.at(5, 0) = c(-1);
    m.at(5, 1) = c(-1);
    m.at(5, 2) = c(2) * q2;
    m.at(5, 3) = c(2) * q2;
    m.at(5, 4) = c(-4) * q2 + c(2);
    m.at(5, 5) = q4 - c(2) * q2 + c(2) * q + c(1);

    return m;
}

std::pair<PolyMatrix, PolyMatrix> matrices_P_D() {
    PolyMatrix p;

    p.at(0, 0) = -(q2 - c(2) * q - c(3));
    p.at(0, 1) = -(q + c(1));
    p.at(0, 2) = -pow(q - c(1), 2);
    p.at(0, 3) = q - c(1);
    p.at(0, 4) = q;
    p.at(0, 5) = c(1);

    p.at(1, 0) = Poly();
    p.at(1, 1) = q + c(1);
    p.at(1, 2) = Poly();
    p.at(1, 3) = -(q - c(1));
    p.at(1, 4) = q;
    p.at(1, 5) = c(1);

    p.at(2, 0) = -(q - c(3));
    p.at(2, 1) = c(-1);
    p.at(2, 2) = q - c(1);
    p.at(2, 3) = c(-1);
    p.at(2, 4) = Poly();
    p.at(2, 5) = c(1);

    p.at(3, 0) = Poly();
    p.at(3, 1) = c(1);
    p.at(3, 2) = Poly();
    p.at(3, 3) = c(1);
    p.at(3, 4) = Poly();
    p.at(3, 5) = c(1);

    p.at(4, 0) = c(1);
    p.at(4, 1) = Poly();
    p.at(4, 2) = c(-1);
    p.at(4, 3) = Poly();
    p.at(4, 4) = Poly();
    p.at(4, 5) = c(1);

    p.at(5, 0) = c(1);
    p.at(5, 1) = Poly();
    p.at(5, 2) = c(1);
    p.at(5, 3) = Poly();
    p.at(5, 4) = c(1);
    p.at(5, 5) = Poly();

    PolyMatrix d;
    d.at(0, 0) = pow(q2 - q, 2);
    d.at(1, 1) = pow(q2 - q, 2);
    d.at(2, 2) = pow(q2 + q, 2);
    d.at(3, 3) = pow(q2 + q, 2);
    d.at(4, 4) = pow(q2 - c(1), 2);
    d.at(5, 5) = pow(q3 - q, 2);

    return {p, d};
}

GenusVector step_unchecked(const PolyMatrix& m, const GenusVector& v) {
    return GenusVector::from_array(m.apply(v.to_array()), v.genus + 1);
}

GenusVector step(const PolyMatrix& m, const GenusVector& v) {
    GenusVector next = step_unchecked(m, v);
    assert_invariants(next);
    return next;
}

GenusVector step(const GenusVector& v) { return step(matrix_M(), v); }

std::vector<GenusVector> iterates(const PolyMatrix& m, unsigned g_max) {
    std::vector<GenusVector> vs;
    vs.reserve(g_max + 1);
    vs.push_back(genus_zero_seed());
    for (unsigned g = 1; g <= g_max; ++g) vs.push_back(step_unchecked(m, vs.back()));
    return vs;
}

GenusVector closed_form(unsigned g) {
    if (g < 1) throw std::invalid_argument("closed_form: genus must be >= 1");
    const unsigned long e = 2UL * g - 1;
    const Poly f3 = pow(q3 - q, e);        // (q^3-q)^(2g-1)
    const Poly f1 = pow(q2 - c(1), e);     // (q^2-1)^(2g-1)
    const Poly fp = pow(q2 + q, e);        // (q^2+q)^(2g-1)
    const Poly fm = pow(q2 - q, e);        // (q^2-q)^(2g-1)
    const mpq_class half(1, 2);

    const RatPoly e0 = RatPoly(f3 + q * f1) +
                       half * RatPoly(q * (q - c(1)) * fp + (q - c(2)) * (q + c(1)) * fm);
    const RatPoly e1 = RatPoly(f3 + q * f1) -
                       half * RatPoly((q - c(1)) * fp + (q + c(1)) * fm);
    const RatPoly e2 = RatPoly(f3) + half * RatPoly(-(q * fp) + (q - c(2)) * fm);
    const RatPoly e3 = RatPoly(f3) + half * RatPoly(fp - fm);
    const RatPoly a = RatPoly(f3) + half * RatPoly(fp - fm);
    const RatPoly b = RatPoly(f1) - half * RatPoly(fp + fm);

    return {halve(e0), halve(e1), halve(e2), halve(e3), halve(a), halve(b), g};
}

Poly gluing_epoly(const GenusVector& k, const GenusVector& h, GluedSpace which) {
    const Poly w4 = glued_w4(k, h);
    switch (which) {
        case GluedSpace::Z0:
            return k.e0 * h.e0 + k.e1 * h.e1 +
                   (q2 - c(1)) * (k.e2 * h.e2 + k.e3 * h.e3) + w4;
        case GluedSpace::Z1:
            return k.e0 * h.e1 + k.e1 * h.e0 +
                   (q2 - c(1)) * (k.e2 * h.e3 + k.e3 * h.e2) + w4;
    }
    throw std::invalid_argument("gluing_epoly: unknown space");
}

Poly gluing_e2(const GenusVector& k, const GenusVector& h) {
    const Poly sk = k.e2 + k.e3 + quot_epoly(k);
    const Poly sh = h.e2 + h.e3 + quot_epoly(h);
    return k.e2 * h.e0 + k.e0 * h.e2 - c(2) * k.e2 * h.e2 +
           k.e3 * h.e1 + k.e1 * h.e3 - c(2) * k.e3 * h.e3 +
           q * sk * sh + glued_v5_defect(k, h);
}

Poly gluing_e3(const GenusVector& k, const GenusVector& h) {
    const Poly sk = k.e2 + k.e3 + quot_epoly(k);
    const Poly sh = h.e2 + h.e3 + quot_epoly(h);
    return k.e2 * h.e1 + k.e1 * h.e2 - c(2) * k.e2 * h.e3 +
           k.e3 * h.e0 + k.e0 * h.e3 - c(2) * k.e3 * h.e2 +
           q * sk * sh + glued_v5_defect(k, h);
}

Poly gluing_hm_total(const GenusVector& k, const GenusVector& h) {
    const Poly sk = k.e2 + k.e3 + quot_epoly(k);
    const Poly sh = h.e2 + h.e3 + quot_epoly(h);
    const Poly rk = k.a + k.b;
    const Poly rh = h.a + h.b;
    const Poly wk = k.e0 + k.e1 + (q - c(1)) * (k.e2 + k.e3);
    const Poly wh = h.e0 + h.e1 + (q - c(1)) * (h.e2 + h.e3);
    // q R(V'') with R(V'') = (q-5)(a_k+b_k)(a_h+b_h) T
    return (q - c(1)) * sk * sh + wk * rh + wh * rk + q * (q - c(5)) * rk * rh;
}

Report verify_recursion(unsigned g_max, unsigned threads) {
    return verify_recursion(g_max, matrix_M(), threads);
}

Report verify_recursion(unsigned g_max, const PolyMatrix& m, unsigned threads) {
    Report report;
    if (g_max < 1) throw std::invalid_argument("verify_recursion: g_max must be >= 1");

    const auto vs = iterates(m, g_max);

    const GenusVector seed = seed_from_blocks(genus1::blocks());
    report.add("seed consistency", "M v^0 = v^1 = (q^4+q^3-q^2-q, q^3-q, q^3-2q^2, q^3, q^3, -1)",
               vs[1] == seed);

    const auto [p, d] = matrices_P_D();
    report.add("diagonalization", "M P = P D over Z[q]", m * p == p * d);
    const Poly det_p = p.determinant();
    report.add("P invertible", "det(P) != 0 as a polynomial", !det_p.is_zero(),
               "det(P) = " + det_p.to_string());

    struct PerGenus {
        bool closed_form_ok = true;
        std::string invariant_detail;
        bool invariants_ok = true;
    };
    std::vector<PerGenus> per_genus(g_max + 1);

    parallel_for(g_max, thread_budget(threads), [&](std::size_t i) {
        const unsigned g = static_cast<unsigned>(i) + 1;
        per_genus[g].closed_form_ok = (vs[g] == closed_form(g));
        const auto failures = invariant_failures(vs[g]);
        per_genus[g].invariants_ok = failures.empty();
        if (!failures.empty()) per_genus[g].invariant_detail = failures.front();
    });

    bool closed_all = true, inv_all = true;
    std::string closed_detail, inv_detail;
    for (unsigned g = 1; g <= g_max; ++g) {
        if (closed_all && !per_genus[g].closed_form_ok) {
            closed_all = false;
            closed_detail = "first mismatch at g=" + std::to_string(g);
        }
        if (inv_all && !per_genus[g].invariants_ok) {
            inv_all = false;
            inv_detail = per_genus[g].invariant_detail;
        }
    }
    report.add("recursion vs closed form",
               "iterated M v^0 equals the closed forms, e.g. e3^g = (q^3-q)^(2g-1) + ((q^2+q)^(2g-1)-(q^2-q)^(2g-1))/2",
               closed_all, closed_detail);
    report.add("genus vector invariants",
               "divisibility by q^3-q, q, q-1 and e0+e1+(q^2-1)(e2+e3)+(q^3-2q^2-q)a-2qb = (q^3-q)^(2g)",
               inv_all, inv_detail);

    bool glue_step_ok = true;
    std::string glue_detail;
    for (unsigned g = 2; g <= g_max && glue_step_ok; ++g) {
        const GenusVector& prev = vs[g - 1];
        glue_step_ok = gluing_epoly(prev, vs[1], GluedSpace::Z0) == vs[g].e0 &&
                       gluing_epoly(prev, vs[1], GluedSpace::Z1) == vs[g].e1 &&
                       gluing_e2(prev, vs[1]) == vs[g].e2 &&
                       gluing_e3(prev, vs[1]) == vs[g].e3 &&
                       gluing_hm_total(prev, vs[1]) == vs[g].a + vs[g].b;
        if (!glue_step_ok) glue_detail = "mismatch at g=" + std::to_string(g);
    }
    report.add("gluing reproduces the induction step",
               "genus (g-1)+1 gluing equals v^g for Z0, Z1, Z2, Z3 and a+b", glue_step_ok,
               glue_detail);

    const unsigned split_max = std::min(g_max, 10U);
    bool split_ok = true;
    std::string split_detail;
    for (unsigned g = 2; g <= split_max && split_ok; ++g)
        for (unsigned k = 1; k < g && split_ok; ++k) {
            const unsigned h = g - k;
            split_ok = gluing_epoly(vs[k], vs[h], GluedSpace::Z0) == vs[g].e0 &&
                       gluing_epoly(vs[k], vs[h], GluedSpace::Z1) == vs[g].e1;
            if (!split_ok)
                split_detail = "mismatch at k=" + std::to_string(k) + ", h=" + std::to_string(h);
        }
    report.add("gluing split independence",
               "for all k+h = g: gluing(v^k, v^h) = v^g for Z0 and Z1", split_ok, split_detail);

    return report;
}

}  // namespace recursion

}  // namespace charvar
