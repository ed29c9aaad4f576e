#include "milnor/syzygy.hpp"

#include <algorithm>

#include "milnor/errors.hpp"

namespace milnor {

SyzygyTriple SyzygyTriple::from_row(const SparseRow& r, int j) {
    SyzygyTriple t;
    t.j = j;
    t.a = HomogeneousPoly(j);
    t.b = HomogeneousPoly(j);
    t.c = HomogeneousPoly(j);
    const int B = space_dim(j);
    const auto basis = monomial_basis(j);
    for (const auto& [col, v] : r.e) {
        HomogeneousPoly* dst[3] = {&t.a, &t.b, &t.c};
        dst[col / B]->add_term(basis[col % B], Rat(v));
    }
    return t;
}

SparseRow SyzygyTriple::to_row() const {
    const int B = space_dim(j);
    std::vector<Rat> v(3 * B, Rat(0));
    const HomogeneousPoly* src[3] = {&a, &b, &c};
    for (int blk = 0; blk < 3; ++blk)
        for (const auto& [m, x] : src[blk]->terms()) v[blk * B + monomial_index(m)] = x;
    return row_from_rat(v);
}

std::vector<SyzygyTriple> syzygy_space(const CurveInput& c, int j, const AnalysisOptions& opts) {
    std::vector<SyzygyTriple> out;
    if (j < 0) return out;
    auto basis = ar_basis(c, j, opts);
    out.reserve(basis->size());
    for (const auto& r : *basis) out.push_back(SyzygyTriple::from_row(r, j));
    return out;
}

GeneratorProfile generator_profile(const CurveInput& c, int jmax, const AnalysisOptions& opts) {
    if (jmax < 1) throw BadParameter("generator search bound must be at least 1");
    GeneratorProfile p;
    p.jmax = jmax;
    for (int j = 0; j <= jmax; ++j) {
        int dim = ar_dim(c, j, opts);
        int g = new_generator_count(c, j, opts);
        p.rows.push_back({j, dim, g});
        for (int i = 0; i < g; ++i) p.degrees.push_back(j);
    }
    p.boundary_warning = p.rows.back().new_gens > 0;
    return p;
}

std::string class_str(CurveClass k) {
    switch (k) {
        case CurveClass::Free: return "Free";
        case CurveClass::NearlyFree: return "NearlyFree";
        default: return "Other";
    }
}

Classification classify(const CurveInput& c, const AnalysisOptions& opts, int jmax) {
    const int d = c.degree();
    if (jmax < 0) jmax = std::max(1, 2 * d - 2);
    auto p = generator_profile(c, jmax, opts);
    if (p.boundary_warning)
        throw InconclusiveBound("minimal generators still appear at the search bound j = " +
                                std::to_string(jmax) + "; raise --jmax");
    Classification r;
    r.degrees = p.degrees;
    if (p.degrees.size() == 2) {
        r.kind = CurveClass::Free;
        r.d1 = p.degrees[0];
        r.d2 = p.degrees[1];
        if (r.d1 + r.d2 != d - 1)
            throw InternalError("two minimal generators of degrees " + std::to_string(r.d1) +
                                "," + std::to_string(r.d2) + " but their sum is not " +
                                std::to_string(d - 1));
    } else if (p.degrees.size() == 3 && p.degrees[1] == p.degrees[2] &&
               p.degrees[0] + p.degrees[1] == d) {
        r.kind = CurveClass::NearlyFree;
        r.d1 = p.degrees[0];
        r.d2 = p.degrees[1];
    } else {
        r.kind = CurveClass::Other;
    }
    return r;
}

std::vector<SyzygyTriple> minimal_generators(const CurveInput& c, int j,
                                             const AnalysisOptions& opts) {
    std::vector<SyzygyTriple> out;
    const int g = new_generator_count(c, j, opts);
    if (g == 0) return out;
    auto basis = ar_basis(c, j, opts);
    RowEchelon ech(3 * space_dim(j));
    if (j > 0) {
        auto prev = ar_basis(c, j - 1, opts);
        for (auto& r : syzygy_shift_candidates(c, j, *prev)) ech.insert(std::move(r));
    }
    for (const auto& r : *basis) {
        if (static_cast<int>(out.size()) == g) break;
        if (ech.insert(r)) out.push_back(SyzygyTriple::from_row(r, j));
    }
    if (static_cast<int>(out.size()) != g)
        throw InternalError("generator extraction found fewer representatives than counted");
    return out;
}

int free_tjurina(int d, int d1, int d2) { return (d - 1) * (d - 1) - d1 * d2; }

int nearly_free_tjurina(int d, int d1, int d2) {
    return (d - 1) * (d - 1) - d1 * (d2 - 1) - 1;
}

int free_ar_dim(int k, int d1, int d2) {
    auto c2 = [](int n) { return n < 2 ? 0 : n * (n - 1) / 2; };
    return c2(k - d1 + 2) + c2(k - d2 + 2);
}

} // namespace milnor
