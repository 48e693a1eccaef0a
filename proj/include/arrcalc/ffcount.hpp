#pragma once

#include <vector>

#include "arrcalc/family.hpp"
#include "arrcalc/poly.hpp"

namespace arrcalc {

/// Sampling plan for recovering chi by interpolation: counts are taken at
/// degree+2 moduli coprime to the arrangement's modulus class, all above a
/// bound that keeps every sample inside the valid counting regime.
struct SamplePlan {
    int modulus = 1;
    long q_min = 0;
    std::vector<long> samples;
};

/// q_min = 2(n+1)(M+1)+1 with M the largest absolute offset; samples are the
/// first degree+2 integers above q_min coprime to the modulus class.
SamplePlan make_plan(const Arrangement& arr, int degree);

/// Number of points of (Z_q)^n lying on none of the hyperplanes reduced
/// mod q. Pruned depth-first assignment with per-coordinate forbidden-residue
/// bitsets and closed counting at the last level; the top-level branches are
/// split across threads (0 = hardware concurrency).
Int count_complement(const Arrangement& arr, long q, int threads = 0);

/// Exact characteristic polynomial via counting and interpolation: samples
/// per the plan, interpolates a degree-n polynomial, validates the held-out
/// sample, and asserts integrality, monicity and degree. One retry with a
/// doubled bound before failing.
IntPoly chi_interpolated(const Arrangement& arr, int threads = 0);

}  // namespace arrcalc
