#pragma once

#include <array>
#include <vector>

#include "milnor/syzygy.hpp"

namespace milnor {

/*
 * One graded cell of the second spectral-sequence page, addressed by the
 * form-degree q = t*d + k with k in [1, d]:
 *
 *   dim_syz = dim Syz(f)_q          (2-forms with df ^ omega = 0)
 *   dim_kr  = dim (df ^ Omega^1)_q  (trivial relations)
 *   kappa   = dim ker delta_q       (divergence zero modulo J_f)
 *   epsilon = kappa - dim_kr        (the page-two dimension)
 */
struct SpectralCell {
    int q = 0, t = 0, k = 0;
    int dim_syz = 0, dim_kr = 0, kappa = 0, epsilon = 0;
};

/*
 * A 2-form omega = a dy^dz - b dx^dz + c dx^dy built on a relation triple,
 * together with its Euler contraction
 *   D(omega) = (bz-cy) dx + (cx-az) dy + (ay-bx) dz
 * whose restriction to the fiber f = 1 represents the cohomology class.
 */
struct WitnessForm {
    int q = 0;
    SyzygyTriple rho;                             // (a, b, c), degree q-2
    std::array<HomogeneousPoly, 3> one_form{HomogeneousPoly(0), HomogeneousPoly(0),
                                            HomogeneousPoly(0)};
    bool closed = false; // divergence = 0 and df ^ omega = 0, both exactly
};

/* a_x + b_y + c_z, one degree down. */
HomogeneousPoly divergence(const SyzygyTriple& t);

/* Euler contraction coefficients (dx, dy, dz) of the associated 2-form. */
std::array<HomogeneousPoly, 3> euler_contraction(const SyzygyTriple& t);

/* The triple of du ^ dv (coefficient degree deg u + deg v - 2). */
SyzygyTriple two_form_wedge(const HomogeneousPoly& u, const HomogeneousPoly& v);

/* Package a triple as a WitnessForm, verifying both closedness equations. */
WitnessForm make_witness(const CurveInput& c, const SyzygyTriple& t);

/* kappa_q: syzygies whose divergence lies in the Jacobian ideal. */
int delta_kernel_dim(const CurveInput& c, int q, const AnalysisOptions& = {});

/* epsilon_q = kappa_q - dim KR_q >= 0. */
int epsilon(const CurveInput& c, int q, const AnalysisOptions& = {});

/* Cells for q in [3, qmax], sorted by q; qmax < 0 selects the default 2d. */
std::vector<SpectralCell> e2_table(const CurveInput& c, int qmax = -1,
                                   const AnalysisOptions& = {});

/* Basis of the honestly-closed syzygies Z2_{f,q}, with contractions. */
std::vector<WitnessForm> closed_syzygy_space(const CurveInput& c, int q,
                                             const AnalysisOptions& = {});

/* Span of { df ^ dg : g monomial of degree q-d } inside S_{q-2}^3. */
std::vector<SparseRow> exact_two_form_rows(const CurveInput& c, int q);

/* dim Z2_{f,q} - dim B2_{f,q}. */
int h2f_dim(const CurveInput& c, int q, const AnalysisOptions& = {});

/* True when the given triple lies in the span of Z2_{f,q}. */
bool in_closed_span(const CurveInput& c, const SyzygyTriple& t, const AnalysisOptions& = {});

/* kappa_{j+2} = 0 checks on the rank-one window [d1, d2) of a free curve. */
struct ProbeRow {
    int j = 0;
    int kappa = 0;
    bool pass = false;
};
std::vector<ProbeRow> injectivity_probe(const CurveInput& c, int d1, int d2,
                                        const AnalysisOptions& = {});

} // namespace milnor
