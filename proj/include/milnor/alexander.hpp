#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "milnor/spectral.hpp"
#include "milnor/upoly.hpp"

namespace milnor {

/*
 * Bounds on the multiplicity of the eigenvalue exp(-2 pi i k / d) as a root
 * of the reduced Alexander polynomial: the page-two dimensions at q = k and
 * q = k' = d - k sandwich the multiplicity between max and sum.  The bound
 * is exact when one side vanishes; for the self-conjugate index k = d/2 the
 * two sides coincide and the honest interval is [eps, 2*eps].
 */
struct MultiplicityBound {
    int k = 0, kprime = 0;
    int eps_k = 0, eps_kprime = 0;
    int lower = 0, upper = 0;
    bool exact = false;
};

struct AlexanderResult {
    int d = 0;
    std::vector<MultiplicityBound> bounds;     // k = 1 .. d-1
    std::optional<int> unity_multiplicity;     // r - 1 when components known
    bool certified = false;                    // all bounds exact and r known
    std::vector<std::pair<int, int>> factors;  // (e, mult), e | d; certified only
    UPoly delta1;                              // expanded product; certified only
};

AlexanderResult alexander(const CurveInput& c, const AnalysisOptions& = {});

/*
 * Cyclotomic factorization (e, mult) over divisors e of d, including the
 * unity factor e = 1 with multiplicity r - 1.  Requires a certified result;
 * throws OrbitInconsistency when multiplicities fail Galois-orbit constancy.
 */
std::vector<std::pair<int, int>> cyclotomic_factorization(const AlexanderResult& r);

UPoly expand_factors(const std::vector<std::pair<int, int>>& factors);

/*
 * Display string with the paper-style collapse: whenever every divisor of n
 * carries multiplicity >= 1, a (t^n - 1) factor is split off greedily from
 * the largest such n.  Examples: "(t^2-t+1)^3", "t^10-1", "1".
 */
std::string factorization_display(std::vector<std::pair<int, int>> factors);

/* Delta^0 = t - 1 and Delta^2 = (t^d - 1)^chiU * Delta^1 / (t - 1), exactly. */
std::pair<UPoly, UPoly> delta0_delta2(const CurveInput& c, int chiU, const AlexanderResult& r);

} // namespace milnor
