#include "milnor/linalg.hpp"

#include <algorithm>

#include "milnor/errors.hpp"

namespace milnor {

std::string rat_str(const Rat& r) {
    return r.get_str();
}

std::string int_str(const Int& n) {
    return n.get_str();
}

void row_make_primitive(SparseRow& r) {
    if (r.empty()) return;
    Int g = 0;
    for (const auto& [c, v] : r.e) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(r.e.front().second) < 0) g = -g;
    if (g != 1) {
        for (auto& [c, v] : r.e) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
}

SparseRow row_combine(const Int& b, const SparseRow& r, const Int& a, const SparseRow& p) {
    SparseRow out;
    out.e.reserve(r.e.size() + p.e.size());
    std::size_t i = 0, j = 0;
    Int t;
    while (i < r.e.size() || j < p.e.size()) {
        if (j >= p.e.size() || (i < r.e.size() && r.e[i].first < p.e[j].first)) {
            t = b * r.e[i].second;
            if (t != 0) out.push(r.e[i].first, t);
            ++i;
        } else if (i >= r.e.size() || p.e[j].first < r.e[i].first) {
            t = a * p.e[j].second;
            if (t != 0) { mpz_neg(t.get_mpz_t(), t.get_mpz_t()); out.push(p.e[j].first, t); }
            ++j;
        } else {
            // b*r - a*p at a shared column
            mpz_mul(t.get_mpz_t(), b.get_mpz_t(), r.e[i].second.get_mpz_t());
            mpz_submul(t.get_mpz_t(), a.get_mpz_t(), p.e[j].second.get_mpz_t());
            if (t != 0) out.push(r.e[i].first, t);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseRow row_from_rat(const std::vector<Rat>& v) {
    Int l = 1;
    for (const auto& x : v)
        if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    SparseRow r;
    Int t;
    for (int c = 0; c < static_cast<int>(v.size()); ++c) {
        if (v[c] == 0) continue;
        t = l / v[c].get_den();
        t *= v[c].get_num();
        r.push(c, t);
    }
    row_make_primitive(r);
    return r;
}

std::vector<Rat> row_to_rat(const SparseRow& r, int ncols) {
    std::vector<Rat> v(ncols, Rat(0));
    for (const auto& [c, x] : r.e) v[c] = Rat(x);
    return v;
}

SparseRow row_shift(const SparseRow& r, int delta) {
    SparseRow out;
    out.e.reserve(r.e.size());
    for (const auto& [c, v] : r.e) out.push(c + delta, v);
    return out;
}

RowEchelon::RowEchelon(int ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

SparseRow RowEchelon::reduce(SparseRow r) const {
    std::size_t pos = 0;
    while (pos < r.e.size()) {
        int col = r.e[pos].first;
        int pr = pivot_row_[col];
        if (pr < 0) {
            ++pos;
            continue;
        }
        const SparseRow& p = rows_[pr];
        r = row_combine(p.lead_val(), r, r.e[pos].second, p);
        row_make_primitive(r);
        // entries before pos sit at non-pivot columns and are untouched
        // by the combination apart from a global rescale
    }
    row_make_primitive(r);
    return r;
}

bool RowEchelon::insert(SparseRow r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    pivot_row_[r.lead()] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

std::vector<int> RowEchelon::pivot_cols() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (int c = 0; c < ncols_; ++c)
        if (pivot_row_[c] >= 0) out.push_back(c);
    return out;
}

std::vector<int> RowEchelon::free_cols() const {
    std::vector<int> out;
    out.reserve(ncols_ - rows_.size());
    for (int c = 0; c < ncols_; ++c)
        if (pivot_row_[c] < 0) out.push_back(c);
    return out;
}

std::vector<Rat> RowEchelon::kernel_vector(int free_col) const {
    std::vector<Rat> x(ncols_, Rat(0));
    x[free_col] = 1;
    // Solve upward: process pivots right-to-left; every non-lead entry of a
    // row sits to the right of its pivot, hence is already determined.
    for (int c = ncols_ - 1; c >= 0; --c) {
        int pr = pivot_row_[c];
        if (pr < 0) continue;
        const SparseRow& row = rows_[pr];
        Rat s(0);
        for (std::size_t i = 1; i < row.e.size(); ++i) {
            const auto& [cc, v] = row.e[i];
            if (x[cc] != 0) s += Rat(v) * x[cc];
        }
        if (s != 0) {
            s /= Rat(row.lead_val());
            x[c] = -s;
        }
    }
    return x;
}

std::vector<std::vector<Rat>> RowEchelon::kernel() const {
    std::vector<std::vector<Rat>> out;
    for (int c = 0; c < ncols_; ++c)
        if (pivot_row_[c] < 0) out.push_back(kernel_vector(c));
    return out;
}

int rank_of_rows(const std::vector<SparseRow>& rows, int ncols) {
    RowEchelon ech(ncols);
    for (const auto& r : rows) ech.insert(r);
    return ech.rank();
}

QMatrix::QMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

SparseRow QMatrix::sparse_row(int r) const {
    std::vector<Rat> v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return row_from_rat(v);
}

int rank(const QMatrix& m) {
    RowEchelon ech(m.cols());
    for (int r = 0; r < m.rows(); ++r) ech.insert(m.sparse_row(r));
    return ech.rank();
}

std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m) {
    RowEchelon ech(m.cols());
    for (int r = 0; r < m.rows(); ++r) ech.insert(m.sparse_row(r));
    return ech.kernel();
}

std::optional<std::vector<Rat>> solve_membership(const QMatrix& m, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != m.rows())
        throw DimensionMismatch("solve_membership: vector length " + std::to_string(v.size()) +
                                " does not match row count " + std::to_string(m.rows()));
    // Kernel of [M | -v]: a kernel vector with last coordinate 1 encodes a
    // solution of M x = v with every free coordinate of M set to zero.
    RowEchelon ech(m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<Rat> row(m.cols() + 1);
        for (int c = 0; c < m.cols(); ++c) row[c] = m.at(r, c);
        row[m.cols()] = -v[r];
        ech.insert(row_from_rat(row));
    }
    if (ech.is_pivot(m.cols())) return std::nullopt;
    std::vector<Rat> k = ech.kernel_vector(m.cols());
    k.pop_back();
    return k;
}

} // namespace milnor
