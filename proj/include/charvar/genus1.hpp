#pragma once

#include <string>
#include <vector>

#include "charvar/poly.hpp"
#include "charvar/report.hpp"
#include "charvar/repring.hpp"

namespace charvar::genus1 {

enum class Space { Z0, Z1, Z2, Z3, Z4, Z4bar, Z4barQuot };

std::string to_string(Space s);

struct StratumEntry {
    std::string label;
    int sign;  // +1 or -1, stored explicitly so dumps show the formula shape
    Poly value;
};

/// A stratification of one of the genus-1 spaces: the signed sum of the
/// entries must reproduce the space's stated E-polynomial.
struct StrataTable {
    std::string name;
    Space space;
    std::string anchor;
    std::vector<StratumEntry> entries;
    Poly stated_total;

    Poly total() const;
};

struct RepStratumEntry {
    std::string label;
    int sign;
    Z2Rep value;
};

/// Stratified Hodge monodromy data, with R(Z2)[q]-valued entries.
struct RepStrataTable {
    std::string name;
    Space space;
    std::string anchor;
    std::vector<RepStratumEntry> entries;
    Z2Rep stated_total;

    Z2Rep total() const;
};

// Stratifications of the genus-1 spaces. Values are closed-form constants
// cross-validated against each other by verify_genus1(); they are not
// re-derived from variety equations.
StrataTable build_z0_strata();
StrataTable build_z1_strata();
StrataTable build_z2bar_strata();
StrataTable build_z3_slice_strata();
StrataTable build_z3bar_strata();
StrataTable build_z3_strata();
StrataTable build_z4_strata();
RepStrataTable build_z4bar_strata();
RepStrataTable build_z4bar_quot_strata();

std::vector<StrataTable> all_poly_tables();
std::vector<RepStrataTable> all_rep_tables();

/// The six genus-1 quantities seeding the induction: E-polynomials of the
/// fixed-holonomy spaces for Id, -Id, J+, J- and the two Hodge monodromy
/// representations of the parabolic family.
struct Genus1Blocks {
    Poly e0;             // e(Z0bar^1) = q^4+q^3-q^2-q
    Poly e1;             // e(Z1bar^1) = q^3-q
    Poly e2;             // e(Z2bar^1) = q^3-2q^2
    Poly e3;             // e(Z3bar^1) = q^3
    Z2Rep hm_z4bar;      // R(Z4bar) over C-{0,±1} = (q^3-1)T
    Z2Rep hm_z4bar_quot; // R(Z4bar/Z2) over C-{±2} = q^3 T - N
};

/// Assembles the blocks from the strata tables (totals, not independent
/// constants).
Genus1Blocks blocks();

/// Runs the genus-1 consistency web: every table total against its stated
/// value, the full-space sum e(Z0)+...+e(Z4) = e(PGL(2,C))^2, the stabilizer
/// relations for Z2/Z3, and the Hodge monodromy cross-checks.
Report verify_genus1();

}  // namespace charvar::genus1
