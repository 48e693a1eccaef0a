#pragma once

#include <string>

#include "arrcalc/family.hpp"
#include "arrcalc/poly.hpp"

namespace arrcalc {

/// A characteristic polynomial produced by the closed-form catalog, together
/// with a machine-readable tag naming the formula branch that produced it.
struct FormulaResult {
    IntPoly chi;             // monic, integer coefficients, degree = dim
    std::string provenance;  // catalog tag, e.g. "Cor3.2" or "Prop4.1-even"
};

// Interval [0,a] formulas. Family A results follow the ambient-n convention
// and carry the extra factor q.
FormulaResult chi_A_0a(int n, long a);   // n >= 2, a >= 1
FormulaResult chi_A_1a(int n, long a);   // n >= 2, a >= 1
FormulaResult chi_BC_0a(int n, long a);  // n >= 1, a >= 1
FormulaResult chi_C_0a(int n, long a);   // n >= 1, a >= 1
FormulaResult chi_B_0a(int n, long a);   // n >= 1, a >= 1 (equal to C)
FormulaResult chi_DQ_0a(int n, long a);  // n >= 3, a >= 1 (D plus coordinate planes)
FormulaResult chi_D_0a(int n, long a);   // n >= 2, a >= 1
FormulaResult chi_BC_1a(int n, long a);  // n >= 1, a >= 1

/// Count of points avoiding the D-deformation hyperplanes with exactly one
/// zero coordinate; satisfies chi_D_0a = chi_DQ_0a + psi.
FormulaResult psi(int n, long a);  // n >= 3, a >= 1

/// The two extra one-parameter arrangements. S63 evaluates the catalog
/// expression re-indexed (a -> a-1 in the operator part) so that it matches
/// the hyperplane list actually built; the provenance tag records this.
FormulaResult chi_special62(int n, long a);  // n >= 1, a >= 1
FormulaResult chi_special63(int n, long a);  // n >= 2, a >= 1

struct IdentityReport {
    bool holds = false;
    std::string identity;  // which equality was checked
    std::string detail;    // mismatch description when holds is false
};

/// Exact polynomial check of the [0,a] <-> [1,a-1] shift identities:
/// family A for any a >= 1; B and D for any a >= 1; C and BC for any a >= 1
/// (even a via the ball-removal identity, odd a via its conjectured
/// counterpart). Sides without a direct catalog entry (B, C, D at [1,a-1])
/// are computed by finite-field interpolation.
IdentityReport shift_identity_check(Family family, int n, long a, int threads = 0);

/// General closed-form entry point. Supported interval shapes, after
/// reflecting so that |lo| <= hi: empty (lo > hi), [0,a], [1,a], and
/// lo < 0 <= hi via the interval-contraction identity. The contraction can
/// bottom out at the [0,0] reflection arrangement, which is not covered by
/// the catalog; that base polynomial is obtained by finite-field
/// interpolation and shifted symbolically (tagged in the provenance).
FormulaResult chi_interval(Family family, int n, long lo, long hi, int threads = 0);
FormulaResult chi_interval(const FamilySpec& spec, int threads = 0);

}  // namespace arrcalc
