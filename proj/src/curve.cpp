#include "milnor/curve.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

/* Columns of the source space S_j^3 (blocks a|b|c, each in monomial order). */
int source_cols(int j) {
    return 3 * space_dim(j);
}

/* Cheap exact elimination is preferred below this source width. */
constexpr int kExactColsThreshold = 600;

} // namespace

struct CurveInput::Data {
    HomogeneousPoly f{0}, fx{0}, fy{0}, fz{0};
    int degree = 0;
    std::optional<int> components;
    int tjurina = -1;
    bool probabilistic = false;

    std::mutex mu;
    std::map<int, int> jrank;                                             // m -> rank
    std::map<int, std::shared_ptr<const RowEchelon>> jspace;              // m -> J_{f,m} echelon
    std::map<int, std::shared_ptr<const std::vector<SparseRow>>> arbasis; // j -> AR basis
    std::map<int, int> gcount;                                            // j -> new generators
};

const HomogeneousPoly& CurveInput::f() const { return d_->f; }
const HomogeneousPoly& CurveInput::fx() const { return d_->fx; }
const HomogeneousPoly& CurveInput::fy() const { return d_->fy; }
const HomogeneousPoly& CurveInput::fz() const { return d_->fz; }
int CurveInput::degree() const { return d_->degree; }
std::optional<int> CurveInput::components() const { return d_->components; }
int CurveInput::tjurina() const { return d_->tjurina; }
bool CurveInput::probabilistic() const { return d_->probabilistic; }

int effective_threads(const AnalysisOptions& opts) {
    int n = opts.threads;
    if (n <= 0) {
        n = static_cast<int>(std::thread::hardware_concurrency());
        if (n <= 0) n = 1;
        if (const char* env = std::getenv("MILNOR_THREADS")) {
            int cap = std::atoi(env);
            if (cap > 0) n = std::min(n, cap);
        }
    }
    return std::max(1, n);
}

std::vector<SparseRow> jacobian_map_rows(const CurveInput& c, int m) {
    const int d = c.degree();
    const int jd = m - d + 1;
    std::vector<SparseRow> rows(space_dim(m));
    if (jd < 0) return rows;
    const auto src = monomial_basis(jd);
    const int B = static_cast<int>(src.size());
    const HomogeneousPoly* parts[3] = {&c.fx(), &c.fy(), &c.fz()};
    // gather (target-row, source-col, coeff) triples bucketed by row
    std::vector<std::vector<std::pair<int, const Rat*>>> bucket(rows.size());
    for (int b = 0; b < 3; ++b) {
        for (int s = 0; s < B; ++s) {
            for (const auto& [t, coeff] : parts[b]->terms()) {
                int row = monomial_index(t.times(src[s]));
                bucket[row].emplace_back(b * B + s, &coeff);
            }
        }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto& entries = bucket[r];
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows[r].e.reserve(entries.size());
        for (const auto& [col, coeff] : entries) {
            // partials of a primitive-integer polynomial have integer coefficients
            rows[r].push(col, Int(coeff->get_num()));
        }
    }
    return rows;
}

/* One row per product f_v * mu: the Jacobian-ideal slice J_{f,m} as vectors in S_m. */
static std::vector<SparseRow> jspace_rows(const CurveInput& c, int m) {
    const int d = c.degree();
    const int jd = m - d + 1;
    std::vector<SparseRow> rows;
    if (jd < 0) return rows;
    const auto src = monomial_basis(jd);
    const HomogeneousPoly* parts[3] = {&c.fx(), &c.fy(), &c.fz()};
    rows.reserve(3 * src.size());
    for (int b = 0; b < 3; ++b) {
        for (const auto& mu : src) {
            SparseRow r;
            r.e.reserve(parts[b]->terms().size());
            for (const auto& [t, coeff] : parts[b]->terms())
                r.push(monomial_index(t.times(mu)), Int(coeff.get_num()));
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

std::vector<SparseRow> jacobian_space_rows(const CurveInput& c, int m) { return jspace_rows(c, m); }

void mark_probabilistic(const CurveInput& c) { c.data()->probabilistic = true; }

std::shared_ptr<const RowEchelon> jacobian_echelon(const CurveInput& c, int m) {
    auto data = c.data();
    {
        std::lock_guard<std::mutex> lk(data->mu);
        auto it = data->jspace.find(m);
        if (it != data->jspace.end()) return it->second;
    }
    auto ech = std::make_shared<RowEchelon>(space_dim(m));
    for (auto& r : jspace_rows(c, m)) ech->insert(std::move(r));
    std::lock_guard<std::mutex> lk(data->mu);
    data->jrank.emplace(m, ech->rank());
    return data->jspace.emplace(m, std::move(ech)).first->second;
}

static int jrank_exact(const CurveInput& c, int m) {
    const int d = c.degree();
    const int R = space_dim(m);
    const int C = source_cols(m - d + 1);
    if (C == 0 || R == 0) return 0;
    if (C <= R) return jacobian_echelon(c, m)->rank(); // also caches the slice echelon
    return rank_of_rows(jacobian_map_rows(c, m), C);
}

static int jrank(const CurveInput& c, int m, const AnalysisOptions& opts);

/* Exact reduced-echelon kernel basis of the multiplication map at source degree j. */
static std::shared_ptr<const std::vector<SparseRow>> ar_basis_exact(const CurveInput& c, int j) {
    const int d = c.degree();
    const int C = source_cols(j);
    auto out = std::make_shared<std::vector<SparseRow>>();
    if (j < 0) return out;
    RowEchelon ech(C);
    for (auto& r : jacobian_map_rows(c, j + d - 1)) ech.insert(std::move(r));
    {
        auto data = c.data();
        std::lock_guard<std::mutex> lk(data->mu);
        data->jrank.emplace(j + d - 1, ech.rank());
    }
    for (int col = 0; col < C; ++col) {
        if (ech.is_pivot(col)) continue;
        SparseRow v = row_from_rat(ech.kernel_vector(col));
        out->push_back(std::move(v));
    }
    return out;
}

/* Reindex a syzygy vector from S_{j-1}^3 coordinates to S_j^3 after multiplying by var. */
static SparseRow shift_syzygy(const SparseRow& v, int j_from, Var var) {
    const int B1 = space_dim(j_from);
    const int B2 = space_dim(j_from + 1);
    const auto src = monomial_basis(j_from);
    SparseRow out;
    out.e.reserve(v.e.size());
    for (const auto& [c, x] : v.e) {
        int block = c / B1;
        Monomial mu = src[c % B1];
        switch (var) {
            case Var::X: ++mu.ex; break;
            case Var::Y: ++mu.ey; break;
            case Var::Z: ++mu.ez; break;
        }
        out.push(block * B2 + monomial_index(mu), x);
    }
    return out;
}

std::vector<SparseRow> syzygy_shift_candidates(const CurveInput& c, int j,
                                               const std::vector<SparseRow>& prev_basis) {
    std::vector<SparseRow> cands;
    cands.reserve(3 * prev_basis.size());
    for (Var var : {Var::X, Var::Y, Var::Z})
        for (const auto& v : prev_basis) cands.push_back(shift_syzygy(v, j - 1, var));
    return cands;
}

/*
 * Certified pumped basis: candidates x,y,z * AR_{j-1} are exact syzygies, so
 * any u of them independent mod p are independent over Q; together with the
 * exact upper bound dim AR_j <= cols - rank_p(map) this pins the dimension
 * and proves the selected set spans.  Falls back to exact elimination when
 * the sandwich does not close (new generators in degree j, or unlucky prime).
 */
static std::shared_ptr<const std::vector<SparseRow>> ar_basis_any(const CurveInput& c, int j,
                                                                  const AnalysisOptions& opts) {
    auto data = c.data();
    {
        std::lock_guard<std::mutex> lk(data->mu);
        auto it = data->arbasis.find(j);
        if (it != data->arbasis.end()) return it->second;
    }
    const int d = c.degree();
    const int C = source_cols(j);
    std::shared_ptr<const std::vector<SparseRow>> result;
    if (opts.mode == ArithmeticMode::Exact || C <= kExactColsThreshold || j <= 0) {
        result = ar_basis_exact(c, j);
    } else {
        auto prev = ar_basis(c, j - 1, opts);
        for (std::size_t attempt = 0; attempt < 2 && !result; ++attempt) {
            const std::uint32_t p = modp::primes()[attempt];
            auto rows = jacobian_map_rows(c, j + d - 1);
            const int R = space_dim(j + d - 1);
            int rank_p;
            if (R <= C) {
                rank_p = modp::rank_mod(rows, C, p);
            } else {
                rank_p = modp::rank_mod(jspace_rows(c, j + d - 1), R, p);
            }
            const int u = C - rank_p; // certified upper bound for dim AR_j
            auto cands = syzygy_shift_candidates(c, j, *prev);
            modp::ModEchelon sel(C, p);
            auto picked = std::make_shared<std::vector<SparseRow>>();
            for (auto& cand : cands) {
                if (static_cast<int>(picked->size()) == u) break;
                if (sel.insert(cand)) picked->push_back(std::move(cand));
            }
            if (static_cast<int>(picked->size()) == u) {
                std::lock_guard<std::mutex> lk(data->mu);
                data->jrank.emplace(j + d - 1, rank_p);
                // the certified basis sits inside S_1 * AR_{j-1}: no new generators
                data->gcount.emplace(j, 0);
                result = std::move(picked);
            }
        }
        if (!result) result = ar_basis_exact(c, j); // gap: new generators or bad primes
    }
    std::lock_guard<std::mutex> lk(data->mu);
    auto it = data->arbasis.find(j);
    if (it != data->arbasis.end()) return it->second;
    data->arbasis.emplace(j, result);
    if (opts.mode == ArithmeticMode::Exact) {
        // dense exact kernels at large degrees are memory-heavy, and the
        // degree-sweeping callers only look one step back: slide a window
        for (auto e = data->arbasis.begin(); e != data->arbasis.end();) {
            if (e->first <= j - 2 && source_cols(e->first) > kExactColsThreshold)
                e = data->arbasis.erase(e);
            else
                ++e;
        }
    }
    return result;
}

std::shared_ptr<const std::vector<SparseRow>> ar_basis(const CurveInput& c, int j,
                                                       const AnalysisOptions& opts) {
    if (j < 0) return std::make_shared<std::vector<SparseRow>>();
    return ar_basis_any(c, j, opts);
}

static int jrank(const CurveInput& c, int m, const AnalysisOptions& opts) {
    const int d = c.degree();
    if (m - d + 1 < 0 || space_dim(m) == 0) return 0;
    auto data = c.data();
    {
        std::lock_guard<std::mutex> lk(data->mu);
        auto it = data->jrank.find(m);
        if (it != data->jrank.end()) return it->second;
    }
    int rank;
    if (opts.mode == ArithmeticMode::Exact || source_cols(m - d + 1) <= kExactColsThreshold) {
        rank = jrank_exact(c, m);
    } else if (opts.mode == ArithmeticMode::ModularTrust) {
        // dimension-only queries trust two agreeing primes and skip certification
        const int R = space_dim(m);
        const int C = source_cols(m - d + 1);
        auto rank_p = [&](std::uint32_t p) {
            if (R <= C) return modp::rank_mod(jacobian_map_rows(c, m), C, p);
            return modp::rank_mod(jspace_rows(c, m), R, p);
        };
        int r1 = rank_p(modp::primes()[0]);
        int r2 = rank_p(modp::primes()[1]);
        if (r1 == r2) {
            rank = r1;
            std::lock_guard<std::mutex> lk(data->mu);
            data->probabilistic = true;
        } else {
            rank = jrank_exact(c, m);
        }
    } else {
        // ride the certified pump: rank = 3 dim S_{m-d+1} - dim AR_{m-d+1}
        int dim = static_cast<int>(ar_basis(c, m - d + 1, opts)->size());
        rank = source_cols(m - d + 1) - dim;
    }
    std::lock_guard<std::mutex> lk(data->mu);
    data->jrank.emplace(m, rank);
    return rank;
}

int milnor_dim(const CurveInput& c, int m, const AnalysisOptions& opts) {
    if (m < 0) return 0;
    return space_dim(m) - jrank(c, m, opts);
}

int ar_dim(const CurveInput& c, int j, const AnalysisOptions& opts) {
    if (j < 0) return 0;
    return source_cols(j) - jrank(c, j + c.degree() - 1, opts);
}

int new_generator_count(const CurveInput& c, int j, const AnalysisOptions& opts) {
    if (j < 0) return 0;
    auto data = c.data();
    {
        std::lock_guard<std::mutex> lk(data->mu);
        auto it = data->gcount.find(j);
        if (it != data->gcount.end()) return it->second;
    }
    const int dim = ar_dim(c, j, opts);
    int g;
    if (dim == 0) {
        g = 0;
    } else if (j == 0) {
        g = dim;
    } else {
        auto prev = ar_basis(c, j - 1, opts);
        auto cands = syzygy_shift_candidates(c, j, *prev);
        const int C = source_cols(j);
        // rank over Z/p never exceeds the rational rank, so a full mod-p rank
        // is an exact certificate that the shifts already span AR_j
        bool closed = false;
        for (std::size_t attempt = 0; attempt < 2 && !closed; ++attempt) {
            modp::ModEchelon sel(C, modp::primes()[attempt]);
            for (const auto& r : cands) {
                if (sel.insert(r) && sel.rank() == dim) {
                    closed = true;
                    break;
                }
            }
        }
        if (closed) {
            g = 0;
        } else {
            RowEchelon ech(C);
            for (auto& r : cands) ech.insert(std::move(r));
            g = dim - ech.rank();
        }
    }
    std::lock_guard<std::mutex> lk(data->mu);
    data->gcount.emplace(j, g);
    return g;
}

int kr_dim(const CurveInput& c, int q) {
    const int d = c.degree();
    auto c2 = [](int n) { return n < 2 ? 0 : n * (n - 1) / 2; };
    return 3 * c2(q - d + 1) - c2(q - 2 * d + 2);
}

std::vector<SparseRow> koszul_rows(const CurveInput& c, int q) {
    const int d = c.degree();
    const int j = q - 2; // coefficient degree of a 2-form of form-degree q
    std::vector<SparseRow> rows;
    if (q - d - 1 < 0 || j < 0) return rows;
    const int B = space_dim(j);
    auto hs = monomial_basis(q - d - 1);
    // df ^ (h dx) -> (0, h f_z, -h f_y); df ^ (h dy) -> (-h f_z, 0, h f_x);
    // df ^ (h dz) -> (h f_y, -h f_x, 0); triples in the (a, b, c) convention.
    auto triple_row = [&](const HomogeneousPoly& a, const HomogeneousPoly& b,
                          const HomogeneousPoly& cpol) {
        std::vector<Rat> v(3 * B, Rat(0));
        for (const auto& [m, x] : a.terms()) v[monomial_index(m)] = x;
        for (const auto& [m, x] : b.terms()) v[B + monomial_index(m)] = x;
        for (const auto& [m, x] : cpol.terms()) v[2 * B + monomial_index(m)] = x;
        return row_from_rat(v);
    };
    for (const auto& hm : hs) {
        HomogeneousPoly h = HomogeneousPoly::monomial(hm, 1);
        HomogeneousPoly hfx = h * c.fx(), hfy = h * c.fy(), hfz = h * c.fz();
        HomogeneousPoly zero(j);
        rows.push_back(triple_row(zero, hfz, -hfy));
        rows.push_back(triple_row(-hfz, zero, hfx));
        rows.push_back(triple_row(hfy, -hfx, zero));
    }
    return rows;
}

int kr_dim_by_rank(const CurveInput& c, int q) {
    auto rows = koszul_rows(c, q);
    if (rows.empty()) return 0;
    return rank_of_rows(rows, 3 * space_dim(q - 2));
}

CurveInput validate(const HomogeneousPoly& f, std::optional<int> components,
                    const AnalysisOptions& opts) {
    if (f.is_zero()) throw DegreeTooSmall("the zero polynomial does not define a curve");
    const int d = f.degree();
    if (d < 3 && !opts.allow_small_degree)
        throw DegreeTooSmall("degree " + std::to_string(d) +
                             " below the supported bound 3 (pass --allow-small-degree to force)");
    if (d < 1) throw DegreeTooSmall("constant polynomial");
    if (components && *components < 1) throw BadParameter("component count must be positive");

    CurveInput c;
    c.d_ = std::make_shared<CurveInput::Data>();
    c.d_->f = f.primitive_integer_form();
    auto p = partials(c.d_->f);
    c.d_->fx = p[0];
    c.d_->fy = p[1];
    c.d_->fz = p[2];
    c.d_->degree = d;
    c.d_->components = components;

    // Euler relation x f_x + y f_y + z f_z = d f: internal sanity check.
    HomogeneousPoly euler = mono_poly(1, 0, 0) * c.d_->fx + mono_poly(0, 1, 0) * c.d_->fy +
                            mono_poly(0, 0, 1) * c.d_->fz;
    if (!(euler == c.d_->f.scaled(d))) throw InternalError("Euler relation violated");

    // Finite-singularity gate: dim M(f)_m must stabilize over the probe window.
    const int lo = std::max(0, 3 * d - 6);
    const int hi = 3 * d + 2;
    std::vector<int> dims;
    for (int m = lo; m <= hi; ++m) dims.push_back(milnor_dim(c, m, opts));
    int tau = -1;
    for (int i = static_cast<int>(dims.size()) - 3; i >= 0; --i) {
        if (dims[i] == dims[i + 1] && dims[i] == dims[i + 2]) {
            tau = dims[i];
            break;
        }
    }
    if (tau < 0)
        throw NonIsolatedSingularities(
            "Milnor-algebra dimensions do not stabilize on degrees [" + std::to_string(lo) + "," +
            std::to_string(hi) + "]: the curve is not reduced");
    c.d_->tjurina = tau;
    return c;
}

} // namespace milnor
