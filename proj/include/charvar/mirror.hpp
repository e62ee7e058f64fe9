#pragma once

#include "charvar/moduli.hpp"
#include "charvar/poly.hpp"
#include "charvar/report.hpp"
#include "charvar/repring.hpp"

namespace charvar::mirror {

/// Coefficients of the SL(2,C)-side parabolic Hodge monodromy
/// R(X4bar/Z2) = a T + b S2 + c Sm2 + d S0 in R(Z2 x Z2)[q].
struct MirrorCoeffs {
    Poly a, b, c, d;
    unsigned genus = 0;

    Klein4Rep as_klein4() const { return {a, b, c, d}; }
};

/// The five gaps e_i - e~_i between the SL(2,C) and PGL(2,C)
/// representation-space E-polynomials, ordered Id, -Id, J+, J-, parabolic.
struct MirrorDifferences {
    Poly d0, d1, d2, d3, d4;
    unsigned genus = 0;
};

/// The four closed forms for (a, b, c, d), staged in RatPoly, forced
/// integral, and validated against the PGL side (a = a~, d = b~, and
/// b + c = (2^(2g)-1)(q^2-q)^(2g-1)). Throws on any violation.
MirrorCoeffs sl_coeffs(unsigned g);

/// The five differences. Both presentations of each line are computed — the
/// explicit binomial form and the b/c form (d2 = b, d3 = c, d4 = b+c,
/// d0 = qc + b, d1 = qb + c) — and must agree; throws otherwise.
MirrorDifferences differences(unsigned g);

/// Reconstructed SL(2,C) representation-space E-polynomial: the PGL value
/// plus the corresponding difference. (The SL side is not recomputed from
/// scratch here; output layers label these values "reconstructed".)
Poly sl_repspace_epoly(unsigned g, moduli::HolonomyClass c);

/// Mirror-symmetry suite for all g <= g_max: the dual presentations, the
/// two linear relations d0+(q-1)d2 = q d4 and d1+(q-1)d3 = q d4, the b<->c
/// swap symmetry, and the stringy difference for C = -Id.
Report verify_mirror(unsigned g_max, unsigned threads = 0);

}  // namespace charvar::mirror
