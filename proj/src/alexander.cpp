#include "milnor/alexander.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>

#include "milnor/errors.hpp"

namespace milnor {

AlexanderResult alexander(const CurveInput& c, const AnalysisOptions& opts) {
    AlexanderResult res;
    const int d = c.degree();
    res.d = d;
    std::map<int, int> eps; // q = k -> epsilon on the t = 0 row
    for (int k = 1; k <= d - 1; ++k) eps[k] = epsilon(c, k, opts);
    bool all_exact = true;
    for (int k = 1; k <= d - 1; ++k) {
        MultiplicityBound b;
        b.k = k;
        b.kprime = d - k;
        b.eps_k = eps[k];
        b.eps_kprime = eps[d - k];
        if (k == b.kprime) {
            b.lower = b.eps_k;
            b.upper = 2 * b.eps_k;
            b.exact = (b.eps_k == 0);
        } else {
            b.lower = std::max(b.eps_k, b.eps_kprime);
            b.upper = b.eps_k + b.eps_kprime;
            b.exact = (b.eps_k == 0 || b.eps_kprime == 0);
        }
        all_exact = all_exact && b.exact;
        res.bounds.push_back(b);
    }
    if (c.components()) res.unity_multiplicity = *c.components() - 1;
    res.certified = all_exact && res.unity_multiplicity.has_value();
    if (res.certified) {
        res.factors = cyclotomic_factorization(res);
        res.delta1 = expand_factors(res.factors);
    }
    return res;
}

std::vector<std::pair<int, int>> cyclotomic_factorization(const AlexanderResult& r) {
    if (!r.certified && !(r.unity_multiplicity.has_value() &&
                          std::all_of(r.bounds.begin(), r.bounds.end(),
                                      [](const MultiplicityBound& b) { return b.exact; })))
        throw Uncertified("cyclotomic factorization needs exact multiplicities and a "
                          "component count");
    const int d = r.d;
    // orbit of exp(-2 pi i k / d) consists of the primitive e-th roots, e = d/gcd
    std::map<int, int> mult_by_e;
    for (const auto& b : r.bounds) {
        const int e = d / std::gcd(d, b.k);
        auto it = mult_by_e.find(e);
        if (it == mult_by_e.end())
            mult_by_e.emplace(e, b.lower);
        else if (it->second != b.lower)
            throw OrbitInconsistency("conjugate eigenvalues at e = " + std::to_string(e) +
                                     " received different multiplicities");
    }
    std::vector<std::pair<int, int>> out;
    if (*r.unity_multiplicity > 0) out.emplace_back(1, *r.unity_multiplicity);
    for (const auto& [e, m] : mult_by_e)
        if (m > 0) out.emplace_back(e, m);
    std::sort(out.begin(), out.end());
    return out;
}

UPoly expand_factors(const std::vector<std::pair<int, int>>& factors) {
    UPoly p = UPoly::one();
    for (const auto& [e, m] : factors) p = p * upow(cyclotomic(e), m);
    return p;
}

std::string factorization_display(std::vector<std::pair<int, int>> factors) {
    std::map<int, int> mult;
    int emax = 1;
    for (const auto& [e, m] : factors) {
        mult[e] += m;
        emax = std::max(emax, e);
    }
    struct Piece {
        UPoly poly;
        int power;
    };
    std::vector<Piece> pieces;
    // collapse: largest n whose every divisor is present becomes (t^n - 1)^c
    for (int n = emax; n >= 2; --n) {
        int take = INT_MAX;
        for (int e = 1; e <= n && take > 0; ++e)
            if (n % e == 0) take = std::min(take, mult.count(e) ? mult[e] : 0);
        if (take <= 0 || take == INT_MAX) continue;
        for (int e = 1; e <= n; ++e)
            if (n % e == 0) mult[e] -= take;
        pieces.push_back({UPoly::tn_minus_1(n), take});
    }
    for (const auto& [e, m] : mult)
        if (m > 0) pieces.push_back({cyclotomic(e), m});
    if (pieces.empty()) return "1";
    if (pieces.size() == 1 && pieces[0].power == 1) return upoly_str(pieces[0].poly);
    std::string s;
    for (const auto& p : pieces) {
        if (!s.empty()) s += "*";
        s += "(" + upoly_str(p.poly) + ")";
        if (p.power != 1) s += "^" + std::to_string(p.power);
    }
    return s;
}

std::pair<UPoly, UPoly> delta0_delta2(const CurveInput& c, int chiU, const AlexanderResult& r) {
    if (!r.certified)
        throw Uncertified("the degree-two characteristic polynomial needs a certified "
                          "degree-one result");
    UPoly delta0 = UPoly::tn_minus_1(1);
    const int d = c.degree();
    UPoly delta2;
    if (chiU >= 0) {
        UPoly num = upow(UPoly::tn_minus_1(d), chiU) * r.delta1;
        auto q = divexact(num, delta0);
        if (!q)
            throw NonPolynomialResult("(t^d-1)^chi * Delta1 is not divisible by t-1");
        delta2 = std::move(*q);
    } else {
        UPoly den = upow(UPoly::tn_minus_1(d), -chiU) * delta0;
        auto q = divexact(r.delta1, den);
        if (!q)
            throw NonPolynomialResult("Delta1 is not divisible by (t^d-1)^-chi * (t-1)");
        delta2 = std::move(*q);
    }
    return {std::move(delta0), std::move(delta2)};
}

} // namespace milnor
