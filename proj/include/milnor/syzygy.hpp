#pragma once

#include <string>
#include <vector>

#include "milnor/curve.hpp"

namespace milnor {

/*
 * A relation a f_x + b f_y + c f_z = 0 with homogeneous coefficients of
 * degree j.  The associated 2-form a dy^dz - b dx^dz + c dx^dy has
 * form-degree q = j + 2.
 */
struct SyzygyTriple {
    int j = 0;
    HomogeneousPoly a{0}, b{0}, c{0};

    static SyzygyTriple from_row(const SparseRow& r, int j);
    SparseRow to_row() const; // S_j^3 coordinates, blocks a|b|c
};

/* Per-degree dimensions and minimal-generator counts up to a search bound. */
struct GeneratorProfile {
    struct Row {
        int j;
        int dim;      // dim AR(f)_j
        int new_gens; // g_j = dim AR_j - dim S_1 * AR_{j-1}
    };
    int jmax = 0;
    std::vector<Row> rows;     // j = 0 .. jmax
    std::vector<int> degrees;  // sorted multiset of generator degrees
    bool boundary_warning = false; // g_jmax > 0: profile may be incomplete
};

enum class CurveClass { Free, NearlyFree, Other };

std::string class_str(CurveClass k);

struct Classification {
    CurveClass kind = CurveClass::Other;
    int d1 = -1, d2 = -1;      // exponents when kind != Other
    std::vector<int> degrees;  // generator degree multiset (always present)
};

/* Echelonized basis of AR(f)_j as explicit triples. */
std::vector<SyzygyTriple> syzygy_space(const CurveInput& c, int j, const AnalysisOptions& = {});

GeneratorProfile generator_profile(const CurveInput& c, int jmax, const AnalysisOptions& = {});

/*
 * Free(d1,d2): exactly two minimal generators (then d1+d2 = d-1 is asserted);
 * NearlyFree(d1,d2): exactly three with degrees (d1,d2,d2) and d1+d2 = d;
 * everything else: Other with the observed degree multiset.
 * jmax < 0 selects the default search bound 2d-2.
 */
Classification classify(const CurveInput& c, const AnalysisOptions& = {}, int jmax = -1);

/* Representatives of the g_j minimal generators landing in degree j. */
std::vector<SyzygyTriple> minimal_generators(const CurveInput& c, int j,
                                             const AnalysisOptions& = {});

/* Expected global Tjurina numbers from the exponents. */
int free_tjurina(int d, int d1, int d2);        // (d-1)^2 - d1*d2
int nearly_free_tjurina(int d, int d1, int d2); // (d-1)^2 - d1*(d2-1) - 1

/* dim AR(f)_k for a free curve with exponents (d1, d2). */
int free_ar_dim(int k, int d1, int d2);

} // namespace milnor
