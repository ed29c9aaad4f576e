#include "milnor/modular.hpp"

#include <gmp.h>

#include "milnor/errors.hpp"

namespace milnor {

std::string mode_str(ArithmeticMode m) {
    switch (m) {
        case ArithmeticMode::Exact: return "exact";
        case ArithmeticMode::ModularVerify: return "modular-verify";
        case ArithmeticMode::ModularTrust: return "modular-trust";
    }
    return "exact";
}

namespace modp {

const std::vector<std::uint32_t>& primes() {
    static const std::vector<std::uint32_t> ps = [] {
        std::vector<std::uint32_t> out;
        mpz_class n = (mpz_class(1) << 31) - 1;
        while (out.size() < 8) {
            if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0)
                out.push_back(static_cast<std::uint32_t>(n.get_ui()));
            n -= 2;
        }
        return out;
    }();
    return ps;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on signed 64-bit
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw InternalError("inv_mod: not invertible");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

ModMatrix::ModMatrix(int rows, int cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(static_cast<std::size_t>(rows) * cols, 0) {}

static std::uint32_t mod_of_int(const Int& v, std::uint32_t p) {
    std::uint32_t m = static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
    return m;
}

ModMatrix ModMatrix::from_rows(const std::vector<SparseRow>& rows, int ncols, std::uint32_t p) {
    ModMatrix m(static_cast<int>(rows.size()), ncols, p);
    for (int r = 0; r < m.rows_; ++r)
        for (const auto& [c, v] : rows[r].e) m.at(r, c) = mod_of_int(v, p);
    return m;
}

int ModMatrix::echelon(std::vector<int>* pivot_cols) {
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pr = -1;
        for (int r = rank; r < rows_; ++r)
            if (at(r, col) != 0) { pr = r; break; }
        if (pr < 0) continue;
        if (pr != rank)
            for (int c = col; c < cols_; ++c) std::swap(at(pr, c), at(rank, c));
        if (pivot_cols) pivot_cols->push_back(col);
        const std::uint64_t inv = inv_mod(at(rank, col), p_);
        // normalize pivot row so updates below need a single multiplier
        for (int c = col; c < cols_; ++c)
            at(rank, c) = static_cast<std::uint32_t>(at(rank, c) * inv % p_);
        const std::uint32_t* prow = &a_[static_cast<std::size_t>(rank) * cols_];
        for (int r = rank + 1; r < rows_; ++r) {
            std::uint32_t f = at(r, col);
            if (f == 0) continue;
            const std::uint64_t neg = p_ - f;
            std::uint32_t* row = &a_[static_cast<std::size_t>(r) * cols_];
            for (int c = col; c < cols_; ++c) {
                // row[c] + neg*prow[c] < 2^31 + 2^62 fits in 64 bits
                row[c] = static_cast<std::uint32_t>((row[c] + neg * prow[c]) % p_);
            }
        }
        ++rank;
    }
    return rank;
}

int rank_mod(const std::vector<SparseRow>& rows, int ncols, std::uint32_t p) {
    ModMatrix m = ModMatrix::from_rows(rows, ncols, p);
    return m.echelon();
}

ModEchelon::ModEchelon(int ncols, std::uint32_t p)
    : ncols_(ncols), p_(p), pivot_row_(ncols, -1) {}

bool ModEchelon::insert(const SparseRow& r) {
    std::vector<std::uint32_t> v(ncols_, 0);
    for (const auto& [c, x] : r.e) v[c] = mod_of_int(x, p_);
    for (int c = 0; c < ncols_; ++c) {
        if (v[c] == 0) continue;
        int pr = pivot_row_[c];
        if (pr < 0) {
            const std::uint64_t inv = inv_mod(v[c], p_);
            for (int cc = c; cc < ncols_; ++cc)
                v[cc] = static_cast<std::uint32_t>(v[cc] * inv % p_);
            pivot_row_[c] = static_cast<int>(rows_.size());
            rows_.push_back(std::move(v));
            ++rank_;
            return true;
        }
        const std::uint64_t neg = p_ - v[c];
        const std::vector<std::uint32_t>& prow = rows_[pr];
        for (int cc = c; cc < ncols_; ++cc)
            v[cc] = static_cast<std::uint32_t>((v[cc] + neg * prow[cc]) % p_);
    }
    return false;
}

} // namespace modp

} // namespace milnor
