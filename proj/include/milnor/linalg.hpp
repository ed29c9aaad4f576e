#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace milnor {

using Int = mpz_class;
using Rat = mpq_class;

/* Canonical text form: "p" for integers, "p/q" otherwise (q > 0, lowest terms). */
std::string rat_str(const Rat& r);
std::string int_str(const Int& n);

/*
 * Sparse integer row vector: entries sorted by strictly increasing column
 * index, no explicit zeros.  A row stands for a rational vector up to
 * positive scale; rows are kept primitive (content 1, leading entry > 0)
 * wherever a canonical representative matters.
 */
struct SparseRow {
    std::vector<std::pair<int, Int>> e;

    bool empty() const { return e.empty(); }
    int lead() const { return e.front().first; }
    const Int& lead_val() const { return e.front().second; }
    std::size_t nnz() const { return e.size(); }
    void push(int col, Int v) { e.emplace_back(col, std::move(v)); }
};

/* Divide by the gcd of all entries and make the leading entry positive. */
void row_make_primitive(SparseRow& r);

/* b*r - a*p, merged by column; result is NOT content-stripped. */
SparseRow row_combine(const Int& b, const SparseRow& r, const Int& a, const SparseRow& p);

/* Clear denominators and strip content; empty result for the zero vector. */
SparseRow row_from_rat(const std::vector<Rat>& v);
std::vector<Rat> row_to_rat(const SparseRow& r, int ncols);

/* Shift every column index by delta (entries stay sorted). */
SparseRow row_shift(const SparseRow& r, int delta);

/*
 * Incremental row-space echelon over Q with integer-normalized rows and
 * fraction-free (cross-multiplication) updates.  Pivot rule: leftmost
 * nonzero column, first inserted row.  Rank, span membership and the
 * kernel of the row system are all canonical: they depend only on the
 * row space, not on insertion order.
 */
class RowEchelon {
  public:
    explicit RowEchelon(int ncols);

    /* Fully reduce r against the stored rows (normal form, primitive). */
    SparseRow reduce(SparseRow r) const;

    /* Reduce, then store the residue if nonzero.  True if rank grew. */
    bool insert(SparseRow r);

    bool contains(SparseRow r) const { return reduce(std::move(r)).empty(); }

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    bool is_pivot(int col) const { return pivot_row_[col] >= 0; }
    std::vector<int> pivot_cols() const; // ascending
    std::vector<int> free_cols() const;  // ascending

    /*
     * Canonical basis of { x : R x = 0 } where R is the inserted row system,
     * in the reduced-echelon convention: one vector per free column f, with
     * x[f] = 1 and zero at every other free column.
     */
    std::vector<std::vector<Rat>> kernel() const;
    std::vector<Rat> kernel_vector(int free_col) const;

    const std::vector<SparseRow>& rows() const { return rows_; }

  private:
    int ncols_;
    std::vector<SparseRow> rows_;   // insertion order
    std::vector<int> pivot_row_;    // column -> index in rows_, or -1
};

/* Rank of a list of vectors (rows), via exact elimination. */
int rank_of_rows(const std::vector<SparseRow>& rows, int ncols);

/*
 * Dense rational matrix, row-major.  This is the public exact-arithmetic
 * contract; heavy internal computations use SparseRow directly.
 */
class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols);
    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    SparseRow sparse_row(int r) const;

  private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

int rank(const QMatrix& m);

/* Canonical reduced-echelon kernel basis of { x : M x = 0 }. */
std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m);

/*
 * Solve M x = v exactly.  Returns the canonical particular solution (free
 * coordinates zero) or nullopt when v is outside the column span.
 */
std::optional<std::vector<Rat>> solve_membership(const QMatrix& m, const std::vector<Rat>& v);

} // namespace milnor
