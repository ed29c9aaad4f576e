#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "milnor/modular.hpp"
#include "milnor/poly.hpp"

namespace milnor {

struct AnalysisOptions {
    ArithmeticMode mode = ArithmeticMode::Exact;
    bool allow_small_degree = false;
    int threads = 0; // 0 = auto (hardware, capped by MILNOR_THREADS)
};

/*
 * A validated reduced plane curve f = 0 together with per-curve caches for
 * the graded Jacobian computations.  Value copies share the caches; all
 * cached quantities are exact and mode-independent (the arithmetic mode only
 * chooses how they are certified), so sharing is safe.
 */
class CurveInput {
  public:
    const HomogeneousPoly& f() const;
    const HomogeneousPoly& fx() const;
    const HomogeneousPoly& fy() const;
    const HomogeneousPoly& fz() const;
    int degree() const;
    std::optional<int> components() const;

    /* Stabilized Milnor-algebra dimension found during validation. */
    int tjurina() const;

    /* True when a trusted (uncertified) modular value entered the caches. */
    bool probabilistic() const;

    struct Data;
    std::shared_ptr<Data> data() const { return d_; }

  private:
    friend CurveInput validate(const HomogeneousPoly&, std::optional<int>, const AnalysisOptions&);
    std::shared_ptr<Data> d_;
};

/*
 * Validate an input polynomial: nonzero, degree bound, and finitely many
 * singular points, detected by stabilization of dim M(f)_m over the probe
 * window [3d-6, 3d+2] (three consecutive equal values required).
 */
CurveInput validate(const HomogeneousPoly& f, std::optional<int> components = std::nullopt,
                    const AnalysisOptions& opts = {});

/* dim M(f)_m = dim S_m - rank of the multiplication matrix S_{m-d+1}^3 -> S_m. */
int milnor_dim(const CurveInput& c, int m, const AnalysisOptions& opts = {});

/* dim AR(f)_j = kernel dimension of the same multiplication map. */
int ar_dim(const CurveInput& c, int j, const AnalysisOptions& opts = {});

/*
 * Basis of AR(f)_j as vectors in S_j^3 coordinates (blocks a|b|c).  Exact
 * mode returns the canonical reduced-echelon kernel basis; accelerated modes
 * may return a certified generator-product basis spanning the same space.
 */
std::shared_ptr<const std::vector<SparseRow>> ar_basis(const CurveInput& c, int j,
                                                       const AnalysisOptions& opts = {});

/* Row-space echelon of the Jacobian-ideal slice J_{f,m} inside S_m. */
std::shared_ptr<const RowEchelon> jacobian_echelon(const CurveInput& c, int m);

/* Spanning rows of J_{f,m}: one row per product f_v * mu, mu in S_{m-d+1}. */
std::vector<SparseRow> jacobian_space_rows(const CurveInput& c, int m);

/* Record that an uncertified (trusted modular) value entered the caches. */
void mark_probabilistic(const CurveInput& c);

/* dim (df ^ Omega^1)_q by the closed binomial formula. */
int kr_dim(const CurveInput& c, int q);

/* Same dimension as the exact rank of the Koszul-generator matrix (oracle). */
int kr_dim_by_rank(const CurveInput& c, int q);

/* Koszul syzygies df^(h dx), df^(h dy), df^(h dz) in S_{q-2}^3 coordinates. */
std::vector<SparseRow> koszul_rows(const CurveInput& c, int q);

/* Rows of the multiplication map S_{m-d+1}^3 -> S_m (one row per monomial of S_m). */
std::vector<SparseRow> jacobian_map_rows(const CurveInput& c, int m);

/* x,y,z shifts of a degree-(j-1) syzygy basis, reindexed into S_j^3 coordinates. */
std::vector<SparseRow> syzygy_shift_candidates(const CurveInput& c, int j,
                                               const std::vector<SparseRow>& prev_basis);

/* Number of minimal module generators landing in degree j (graded Nakayama). */
int new_generator_count(const CurveInput& c, int j, const AnalysisOptions& opts = {});

/* Number of worker threads to use (>= 1), honoring MILNOR_THREADS. */
int effective_threads(const AnalysisOptions& opts);

} // namespace milnor
