#pragma once

#include <optional>
#include <string>
#include <utility>

#include "charvar/poly.hpp"
#include "charvar/report.hpp"
#include "charvar/repring.hpp"

namespace charvar::moduli {

/// Holonomy class around the puncture: Id, -Id, the two Jordan classes
/// J+ = [[1,1],[0,1]], J- = [[-1,1],[0,-1]], and the regular semisimple
/// family diag(lambda, 1/lambda), lambda != 0, ±1.
enum class HolonomyClass { Id, MinusId, JPlus, JMinus, Parabolic };

std::string to_string(HolonomyClass c);
std::optional<HolonomyClass> parse_holonomy(const std::string& name);

/// The reducible locus of the Id representation space, stratum by stratum,
/// together with the reducible part of the moduli space itself.
struct ReducibleLocusBreakdown {
    Poly r1;     // diagonalizable, non-central: (q^3-q)((q-1)^(2g-1)+(q+1)^(2g-1))/2 - q^2
    Poly r2;     // common eigenvector, non-diagonal part
    Poly r3;     // central tuples, a single point after the quotient
    Poly r4;     // Jordan-type tuples over the central character
    Poly total;  // r1 + r2 + r3 + r4
    Poly mred;   // e of the reducible moduli part, ((q-1)^(2g) + (q+1)^(2g))/2
};

ReducibleLocusBreakdown reducible_locus(unsigned g);

/// e(R) as a single closed expression, used as a cross-check on the sum of
/// the four strata.
Poly reducible_total_closed_form(unsigned g);

/// E-polynomial of the moduli space M_C for genus g, computed by dividing
/// the representation-space quantities by their stabilizers (and, for Id,
/// splitting off the reducible locus first). Throws NotDivisibleError if a
/// stabilizer division is inexact — that would mean a broken identity.
Poly moduli_epoly(unsigned g, HolonomyClass c);

/// The same five E-polynomials from their closed forms; an independent
/// route kept separate so the two can be compared.
Poly moduli_epoly_closed_form(unsigned g, HolonomyClass c);

/// E-polynomial of the representation space itself (e0..e3, and the fibre
/// e(Z4bar_lambda) = a+b for the parabolic class).
Poly repspace_epoly(unsigned g, HolonomyClass c);

/// Euler characteristic chi(M_C) = e(M_C)(1). Requires g >= 2, where the
/// closed forms 3*2^(2g-3)-1, -2^(2g-3), -2^(2g-2), 2^(2g-2), 0 apply.
mpz_class euler_characteristic(unsigned g, HolonomyClass c);

/// chi closed form per class (g >= 2).
mpz_class euler_characteristic_closed_form(unsigned g, HolonomyClass c);

/// (degree, leading coefficient) of e(M_C): the dimension of the character
/// variety and its number of components of maximal dimension. Requires g >= 2.
std::pair<int, mpz_class> dimension_and_components(unsigned g, HolonomyClass c);

/// (q+1) e(M_-Id) + e(M_J-) = e(M_lambda), exactly.
Report verify_hausel_relation(unsigned g);

/// R(M_lambda) = e(M_lambda) T: the parabolic moduli family has trivial
/// monodromy. Throws NotDivisibleError if (a+b)/(q-1) is inexact.
Z2Rep parabolic_hodge_monodromy(unsigned g);

/// Moduli-level consistency for all g <= g_max: pipeline vs closed forms,
/// exactness of every stabilizer division, the reducible-locus sum, the
/// representation-space linear identities, and (for g >= 2) Euler
/// characteristics, dimensions and component counts.
Report verify_moduli(unsigned g_max, unsigned threads = 0);

}  // namespace charvar::moduli
