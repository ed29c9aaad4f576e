#include "milnor/spectral.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

/*
 * Divergence of a syzygy row (S_j^3 coordinates) as a sparse vector over the
 * monomial basis of S_{j-1}, computed termwise without building polynomials.
 */
SparseRow divergence_row(const SparseRow& r, int j) {
    const int B = space_dim(j);
    const auto basis = monomial_basis(j);
    std::map<int, Int> acc;
    for (const auto& [col, v] : r.e) {
        const int block = col / B;
        Monomial mu = basis[col % B];
        int e = 0;
        switch (block) {
            case 0: e = mu.ex; --mu.ex; break;
            case 1: e = mu.ey; --mu.ey; break;
            default: e = mu.ez; --mu.ez; break;
        }
        if (e == 0) continue;
        acc[monomial_index(mu)] += v * e;
    }
    SparseRow out;
    for (auto& [c, v] : acc)
        if (v != 0) out.push(c, std::move(v));
    return out;
}

} // namespace

HomogeneousPoly divergence(const SyzygyTriple& t) {
    return t.a.partial(Var::X) + t.b.partial(Var::Y) + t.c.partial(Var::Z);
}

std::array<HomogeneousPoly, 3> euler_contraction(const SyzygyTriple& t) {
    HomogeneousPoly x = mono_poly(1, 0, 0), y = mono_poly(0, 1, 0), z = mono_poly(0, 0, 1);
    return {t.b * z - t.c * y, t.c * x - t.a * z, t.a * y - t.b * x};
}

SyzygyTriple two_form_wedge(const HomogeneousPoly& u, const HomogeneousPoly& v) {
    auto ux = u.partial(Var::X), uy = u.partial(Var::Y), uz = u.partial(Var::Z);
    auto vx = v.partial(Var::X), vy = v.partial(Var::Y), vz = v.partial(Var::Z);
    SyzygyTriple t;
    t.j = std::max(u.degree() + v.degree() - 2, 0);
    t.a = uy * vz - uz * vy;
    t.b = uz * vx - ux * vz;
    t.c = ux * vy - uy * vx;
    return t;
}

WitnessForm make_witness(const CurveInput& c, const SyzygyTriple& t) {
    WitnessForm w;
    w.q = t.j + 2;
    w.rho = t;
    w.one_form = euler_contraction(t);
    HomogeneousPoly wedge = t.a * c.fx() + t.b * c.fy() + t.c * c.fz();
    w.closed = wedge.is_zero() && divergence(t).is_zero();
    return w;
}

int delta_kernel_dim(const CurveInput& c, int q, const AnalysisOptions& opts) {
    const int j = q - 2;
    if (j < 0) return 0;
    auto basis = ar_basis(c, j, opts);
    const int n = static_cast<int>(basis->size());
    if (n == 0) return 0;
    const int m = q - 3;
    if (m < 0) return n; // divergence of constant coefficients is zero

    std::vector<SparseRow> divs;
    divs.reserve(basis->size());
    for (const auto& r : *basis) divs.push_back(divergence_row(r, j));

    if (opts.mode == ArithmeticMode::ModularTrust) {
        // two agreeing primes: accept rank(div mod J) = rank(J + div) - rank(J)
        auto jrows = jacobian_space_rows(c, m);
        const auto& ps = modp::primes();
        int r0 = -1, r1 = -1;
        for (std::size_t i = 0; i < 2; ++i) {
            modp::ModEchelon ech(space_dim(m), ps[i]);
            for (const auto& r : jrows) ech.insert(r);
            int grow = 0;
            for (const auto& r : divs)
                if (ech.insert(r)) ++grow;
            (i == 0 ? r0 : r1) = grow;
        }
        if (r0 == r1) {
            mark_probabilistic(c);
            return n - r0;
        }
        // primes disagreed: fall through to the exact computation
    }

    RowEchelon ech = *jacobian_echelon(c, m);
    int grow = 0;
    for (auto& r : divs)
        if (ech.insert(std::move(r))) ++grow;
    return n - grow;
}

int epsilon(const CurveInput& c, int q, const AnalysisOptions& opts) {
    int e = delta_kernel_dim(c, q, opts) - kr_dim(c, q);
    if (e < 0)
        throw InternalError("negative page-two dimension at q = " + std::to_string(q));
    return e;
}

std::vector<SpectralCell> e2_table(const CurveInput& c, int qmax, const AnalysisOptions& opts) {
    const int d = c.degree();
    if (qmax < 0) qmax = 2 * d;
    std::vector<SpectralCell> cells;
    for (int q = 3; q <= qmax; ++q) {
        SpectralCell cell;
        cell.q = q;
        cell.t = (q - 1) / d;
        cell.k = q - cell.t * d;
        cell.dim_syz = ar_dim(c, q - 2, opts);
        cell.dim_kr = kr_dim(c, q);
        cell.kappa = delta_kernel_dim(c, q, opts);
        cell.epsilon = cell.kappa - cell.dim_kr;
        if (cell.epsilon < 0)
            throw InternalError("negative page-two dimension at q = " + std::to_string(q));
        cells.push_back(cell);
    }
    return cells;
}

std::vector<WitnessForm> closed_syzygy_space(const CurveInput& c, int q,
                                             const AnalysisOptions& opts) {
    std::vector<WitnessForm> out;
    const int j = q - 2;
    if (j < 0) return out;
    auto basis = ar_basis(c, j, opts);
    const int n = static_cast<int>(basis->size());
    if (n == 0) return out;
    const int m = q - 3;
    std::vector<std::vector<Rat>> lambdas;
    if (m < 0) {
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> l(n, Rat(0));
            l[i] = 1;
            lambdas.push_back(std::move(l));
        }
    } else {
        // left kernel of the divergence matrix: one constraint row per
        // monomial of S_{q-3}, entries indexed by basis position
        std::vector<SparseRow> constraints(space_dim(m));
        for (int i = 0; i < n; ++i)
            for (auto& [mono, v] : divergence_row((*basis)[i], j).e)
                constraints[mono].push(i, std::move(v));
        RowEchelon ech(n);
        for (auto& r : constraints) ech.insert(std::move(r));
        lambdas = ech.kernel();
    }
    const int C = 3 * space_dim(j);
    for (const auto& l : lambdas) {
        std::vector<Rat> acc(C, Rat(0));
        for (int i = 0; i < n; ++i) {
            if (l[i] == 0) continue;
            for (const auto& [col, v] : (*basis)[i].e) acc[col] += l[i] * Rat(v);
        }
        WitnessForm w = make_witness(c, SyzygyTriple::from_row(row_from_rat(acc), j));
        if (!w.closed) throw InternalError("closed-form solver produced a non-closed form");
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<SparseRow> exact_two_form_rows(const CurveInput& c, int q) {
    std::vector<SparseRow> rows;
    const int gd = q - c.degree();
    if (gd < 0) return rows;
    for (const auto& g : monomial_basis(gd)) {
        SyzygyTriple t = two_form_wedge(c.f(), HomogeneousPoly::monomial(g, 1));
        rows.push_back(t.to_row());
    }
    return rows;
}

int h2f_dim(const CurveInput& c, int q, const AnalysisOptions& opts) {
    int z2 = static_cast<int>(closed_syzygy_space(c, q, opts).size());
    auto b2rows = exact_two_form_rows(c, q);
    int b2 = b2rows.empty() ? 0 : rank_of_rows(b2rows, 3 * space_dim(q - 2));
    return z2 - b2;
}

bool in_closed_span(const CurveInput& c, const SyzygyTriple& t, const AnalysisOptions& opts) {
    auto space = closed_syzygy_space(c, t.j + 2, opts);
    RowEchelon ech(3 * space_dim(t.j));
    for (const auto& w : space) ech.insert(w.rho.to_row());
    return ech.contains(t.to_row());
}

std::vector<ProbeRow> injectivity_probe(const CurveInput& c, int d1, int d2,
                                        const AnalysisOptions& opts) {
    std::vector<ProbeRow> out;
    for (int j = d1; j < d2; ++j) {
        ProbeRow r;
        r.j = j;
        r.kappa = delta_kernel_dim(c, j + 2, opts);
        r.pass = (r.kappa == 0);
        out.push_back(r);
    }
    return out;
}

} // namespace milnor
