#pragma once

#include <string>
#include <vector>

#include "arrcalc/poly.hpp"

namespace arrcalc {

/// The supported hyperplane families. A through BC are the interval
/// deformations of the classical reflection arrangements; DQ adds the
/// coordinate hyperplanes to the D deformation; S62/S63 are the two extra
/// one-parameter arrangements handled by the formula catalog.
enum class Family { A, B, C, D, BC, DQ, S62, S63 };

const char* family_name(Family f);
Family family_from_name(const std::string& name);
bool family_is_special(Family f);

struct FamilySpec {
    Family family = Family::A;
    int n = 1;     // coordinates of the ambient space
    long lo = 0;   // interval [lo, hi]; lo > hi means the empty arrangement
    long hi = 0;   // for S62/S63 the single parameter a is stored in both
};

/// One affine hyperplane: normal . x = offset, with integer data as written.
struct Hyperplane {
    std::vector<long> normal;
    long offset = 0;
};

struct Arrangement {
    int dim = 0;
    std::vector<Hyperplane> hyperplanes;  // duplicates preserved as generated
    int modulus = 1;                      // 1 for A-type deformations, else 2
    std::string label;
};

/// Parse "FAMILY:n:lo:hi", or "FAMILY:n:a" for S62/S63.
FamilySpec parse_spec(const std::string& text);
std::string format_spec(const FamilySpec& spec);

/// Generate the hyperplane list, ordered by equation group, then (i,j), then
/// offset. Coincident equations (x_i = k vs 2x_i = 2k) are preserved.
Arrangement build(const FamilySpec& spec);

/// Number of distinct hyperplanes after canonical normalization (primitive
/// normal with positive leading entry, rational offset).
std::size_t dedup_count(const Arrangement& arr);

/// Rank of the essentialized arrangement: n-1 for family A, n otherwise.
int rank_of(const FamilySpec& spec);

/// Interval negation [lo,hi] -> [-hi,-lo]; the image of the x -> -x
/// substitution, which preserves the characteristic polynomial.
FamilySpec reflect(const FamilySpec& spec);

/// Canonical form of a single hyperplane, exposed for dedup and tests:
/// primitive integer normal with positive first nonzero entry plus a reduced
/// rational offset.
struct CanonicalHyperplane {
    std::vector<long> normal;
    Rat offset;
    bool operator==(const CanonicalHyperplane& o) const {
        return normal == o.normal && offset == o.offset;
    }
};
CanonicalHyperplane canonical_form(const Hyperplane& h);

}  // namespace arrcalc
