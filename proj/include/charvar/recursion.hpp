#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "charvar/genus1.hpp"
#include "charvar/poly.hpp"
#include "charvar/report.hpp"

namespace charvar {

/// 6x6 matrix over Z[q].
class PolyMatrix {
public:
    static constexpr std::size_t kSize = 6;

    Poly& at(std::size_t row, std::size_t col) { return entries_[row * kSize + col]; }
    const Poly& at(std::size_t row, std::size_t col) const { return entries_[row * kSize + col]; }

    friend PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    std::array<Poly, kSize> apply(const std::array<Poly, kSize>& v) const;

    /// Exact determinant by cofactor expansion.
    Poly determinant() const;

private:
    std::array<Poly, kSize * kSize> entries_;
};

/// The six quantities carrying the E-polynomial information of the genus-g
/// representation spaces: (e0, e1, e2, e3) for holonomy Id, -Id, J+, J- and
/// (a, b) the T/N coefficients of the parabolic Hodge monodromy R(Z4bar^g/Z2).
struct GenusVector {
    Poly e0, e1, e2, e3, a, b;
    unsigned genus = 0;

    std::array<Poly, 6> to_array() const { return {e0, e1, e2, e3, a, b}; }
    static GenusVector from_array(const std::array<Poly, 6>& v, unsigned genus) {
        return {v[0], v[1], v[2], v[3], v[4], v[5], genus};
    }

    friend bool operator==(const GenusVector&, const GenusVector&) = default;
};

namespace recursion {

/// v^0 = (1, 0, 0, 0, 0, 0).
GenusVector genus_zero_seed();

/// v^1 as assembled from the genus-1 strata tables.
GenusVector seed_from_blocks(const genus1::Genus1Blocks& blocks);

/// Invariants every genus vector must satisfy: divisibility of e1 by q^3-q,
/// of e2 and e3 by q, of a+b by q-1, and the full-space grand sum
/// e0 + e1 + (q^2-1)(e2+e3) + (q^3-2q^2-q)a - 2qb = (q^3-q)^(2g),
/// whose last two weights are e(Z4) = (q^2-q) e(Z4bar/Z2) + q e(Z4bar).
/// Returns human-readable descriptions of any failures (empty when clean).
std::vector<std::string> invariant_failures(const GenusVector& v);

/// Throws InvariantViolation when invariant_failures(v) is non-empty.
void assert_invariants(const GenusVector& v);

/// The 6x6 handle-attachment matrix M over Z[q] with v^g = M v^(g-1).
PolyMatrix matrix_M();

/// Diagonalization data (P, D) with M P = P D and D the diagonal of
/// ((q^2-q)^2, (q^2-q)^2, (q^2+q)^2, (q^2+q)^2, (q^2-1)^2, (q^3-q)^2).
std::pair<PolyMatrix, PolyMatrix> matrices_P_D();

/// One induction step v -> M v, incrementing genus and re-asserting the
/// GenusVector invariants (throws InvariantViolation on failure).
GenusVector step(const GenusVector& v);
GenusVector step(const PolyMatrix& m, const GenusVector& v);

/// Matrix-vector product without the invariant assertions; verification
/// paths use this so a broken matrix yields a report instead of a throw.
GenusVector step_unchecked(const PolyMatrix& m, const GenusVector& v);

/// v^0 .. v^g_max by iterated unchecked steps.
std::vector<GenusVector> iterates(const PolyMatrix& m, unsigned g_max);

/// The closed forms for v^g, staged in RatPoly and forced integral.
GenusVector closed_form(unsigned g);

enum class GluedSpace { Z0, Z1 };

/// E-polynomial of the glued space of genus k+h from the two sides' blocks:
/// for Z0, e0k e0h + e1k e1h + (q^2-1)(e2k e2h + e3k e3h) + e(W4); for Z1
/// the cross-paired variant with the same W4 term. e(W4) is routed through
/// the representation-ring e-maps of the tensor product of the two parabolic
/// Hodge monodromies.
Poly gluing_epoly(const GenusVector& k_blocks, const GenusVector& h_blocks, GluedSpace which);

/// Gluing for the Jordan-type spaces and the parabolic Hodge monodromy.
/// Their k = g-1, h = 1 specializations reproduce matrix rows 3-5.
Poly gluing_e2(const GenusVector& k_blocks, const GenusVector& h_blocks);
Poly gluing_e3(const GenusVector& k_blocks, const GenusVector& h_blocks);
/// Returns a^g + b^g, the trivial-part coefficient of R(Z4bar^(k+h)).
Poly gluing_hm_total(const GenusVector& k_blocks, const GenusVector& h_blocks);

/// Full recursion web for g <= g_max: seed consistency with the genus-1
/// blocks, step-iteration against the closed forms, M P = P D, det(P) != 0,
/// the per-genus invariants, and the gluing identities.
Report verify_recursion(unsigned g_max, unsigned threads = 0);
Report verify_recursion(unsigned g_max, const PolyMatrix& m, unsigned threads = 0);

}  // namespace recursion

}  // namespace charvar
