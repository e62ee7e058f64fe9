#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "charvar/poly.hpp"

namespace charvar {

/// Element of R(Z2)[q]: t * T + n * N, with T the trivial and N the
/// non-trivial character. Coefficients may be negative (virtual
/// representations); no positivity is enforced.
struct Z2Rep {
    Poly t;
    Poly n;

    friend bool operator==(const Z2Rep&, const Z2Rep&) = default;
    Z2Rep operator-() const { return {-t, -n}; }
    friend Z2Rep operator+(const Z2Rep& x, const Z2Rep& y) { return {x.t + y.t, x.n + y.n}; }
    friend Z2Rep operator-(const Z2Rep& x, const Z2Rep& y) { return {x.t - y.t, x.n - y.n}; }

    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Z2Rep& r);

/// Element of R(Z2 x Z2)[q] over the base C - {±2}:
/// t*T + s2*S2 + sm2*Sm2 + s0*S0, where S2 (resp. Sm2) is trivial over 2
/// (resp. -2) and non-trivial over the other puncture, and S0 = S2 (x) Sm2.
struct Klein4Rep {
    Poly t;
    Poly s2;
    Poly sm2;
    Poly s0;

    friend bool operator==(const Klein4Rep&, const Klein4Rep&) = default;
    friend Klein4Rep operator+(const Klein4Rep& x, const Klein4Rep& y) {
        return {x.t + y.t, x.s2 + y.s2, x.sm2 + y.sm2, x.s0 + y.s0};
    }
    friend Klein4Rep operator-(const Klein4Rep& x, const Klein4Rep& y) {
        return {x.t - y.t, x.s2 - y.s2, x.sm2 - y.sm2, x.s0 - y.s0};
    }

    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Klein4Rep& r);

/// Tensor product in R(Z2)[q]; N (x) N = T.
Z2Rep tensor_z2(const Z2Rep& x, const Z2Rep& y);

/// Tensor product in R(Z2 x Z2)[q], the bilinear extension of the character
/// table: S2(x)S2 = Sm2(x)Sm2 = S0(x)S0 = T, S2(x)Sm2 = S0, S2(x)S0 = Sm2,
/// Sm2(x)S0 = S2.
Klein4Rep tensor_klein4(const Klein4Rep& x, const Klein4Rep& y);

/// Base change along the double cover: aT + bS2 + cSm2 + dS0 over C - {±2}
/// pushes to (a+d)T + (b+c)N.
Z2Rep pushforward_to_z2(const Klein4Rep& x);

/// e-map for Hodge monodromy representations over C - {0, ±1}:
/// e(T) = q - 3, e(N) = -2.
Poly e_over_three_punctures(const Z2Rep& x);

/// e-map for Hodge monodromy representations over C - {±2}:
/// e(T) = q - 2, e(N) = -1.
Poly e_over_two_punctures(const Z2Rep& x);

/// Invariant/anti-invariant E-polynomials of a Z2-quotient fibration over
/// C - {±2}: e+ = (q-2)a - (b+c+d), e- = (q-2)d - (a+b+c).
std::pair<Poly, Poly> e_plus_minus_klein4(const Klein4Rep& x);

/// Generic l-puncture form, kept for tests: a fibration over C minus l
/// points with finite monodromy and rational quotient curve has
/// e = (q-1)*invariant_part - (l-1)*total.
Poly e_fibration_generic(const Poly& invariant_part, const Poly& total, unsigned punctures);

}  // namespace charvar
