#pragma once

#include <cstdint>
#include <vector>

#include "arrcalc/family.hpp"
#include "arrcalc/poly.hpp"

namespace arrcalc {

/// A nonempty affine flat, stored as the reduced row echelon form of its
/// defining system [A | b] over the rationals. Two flats are equal iff their
/// canonical forms coincide. `above` is the set of arrangement hyperplanes
/// containing the flat, as a bitmask over the deduplicated hyperplane list;
/// reverse inclusion of flats is subset order on these masks.
struct Flat {
    std::vector<std::vector<Rat>> rref;  // rows over n+1 columns (last = offset)
    int dim = 0;
    std::vector<std::uint64_t> above;
};

struct IntersectionPoset {
    int dim = 0;
    std::size_t hyperplane_count = 0;  // distinct hyperplanes
    std::vector<Flat> flats;           // flats[0] is the ambient space
};

/// All nonempty intersections of subsets of the hyperplanes, built
/// incrementally one hyperplane at a time. Small-instance oracle: refuses
/// arrangements with more than 64 distinct hyperplanes or dimension above 4.
IntersectionPoset intersection_poset(const Arrangement& arr);

/// Mobius values mu(ambient, x) for every flat, aligned with poset.flats.
std::vector<Int> mobius_values(const IntersectionPoset& poset);

/// Characteristic polynomial by Mobius inversion over the intersection poset.
IntPoly chi_mobius(const Arrangement& arr);

}  // namespace arrcalc
