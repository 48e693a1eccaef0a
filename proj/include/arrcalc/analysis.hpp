#pragma once

#include <complex>
#include <vector>

#include "arrcalc/family.hpp"
#include "arrcalc/poly.hpp"

namespace arrcalc {

/// All complex roots with multiplicity, sorted by (re, im). Exact square-free
/// decomposition first, so repeated roots come out exact; the square-free
/// parts go through companion-matrix eigenvalues plus Newton polishing.
std::vector<std::complex<double>> poly_roots(const IntPoly& p);

/// Clear denominators: the integer polynomial with the same roots.
IntPoly cleared_denominators(const RatPoly& p);

/// Verification record for the shared-real-part property of one arrangement.
struct RiemannReport {
    FamilySpec spec;                          // interval [-a+1, b]
    int l = 0;                                // rank
    long h = 0;                               // distinct hyperplanes
    Rat target;                               // h / l
    IntPoly chi;                              // ambient polynomial
    IntPoly chi_essential;                    // degree-l polynomial whose roots are checked
    std::vector<std::complex<double>> roots;  // l roots with multiplicity
    double max_re_deviation = 0.0;
    double tol = 0.0;
    bool pass = false;  // max_re_deviation < tol
};

/// Build the [-a+1, b] deformation, compute chi by closed form, count the
/// distinct hyperplanes, and check that every root has real part h/l. The
/// exact coefficient identity (sum of roots = h) is asserted, not reported.
RiemannReport verify_riemann(Family family, int n, long a, long b, double tol = 1e-8,
                             int threads = 0);

enum class Lemma51Status { ok, fails_conclusion, precondition_g, precondition_f };

struct Lemma51Result {
    Lemma51Status status = Lemma51Status::ok;
    double max_deviation = 0.0;
};

/// Numeric check that g(S) f has all roots on the line re = r + deg(g)/2,
/// given that g's roots lie on the unit circle and f's on re = r.
/// Precondition failures are reported separately from a conclusion failure.
Lemma51Result lemma51_numeric_check(const ShiftExpr& g, const IntPoly& f, double r,
                                    double tol = 1e-8);

/// Zaslavsky evaluation: number of regions = (-1)^n chi(-1).
Int region_count(const IntPoly& chi, int n);

/// Closed-form region counts of the [1,1] deformation, one binomial sum per
/// family.
Int linial_regions_closed(Family family, int n);

}  // namespace arrcalc
