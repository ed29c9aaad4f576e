#pragma once

#include <cstdint>
#include <vector>

#include "milnor/linalg.hpp"

namespace milnor {

/*
 * Arithmetic policy for the heavy rank computations.
 *
 *   Exact         - every dimension from exact rational elimination.
 *   ModularVerify - word-size prime elimination supplies candidate ranks and
 *                   pivot structure; every reported dimension is still
 *                   certified exactly (two-sided sandwich with exact witness
 *                   vectors, falling back to exact elimination on failure).
 *   ModularTrust  - modular ranks are trusted when two primes agree; the
 *                   report is flagged "probabilistic".
 */
enum class ArithmeticMode { Exact, ModularVerify, ModularTrust };

std::string mode_str(ArithmeticMode m);

namespace modp {

/* Deterministic list of the largest primes below 2^31. */
const std::vector<std::uint32_t>& primes();

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/* Dense row-major matrix over Z/p. */
class ModMatrix {
  public:
    ModMatrix(int rows, int cols, std::uint32_t p);
    static ModMatrix from_rows(const std::vector<SparseRow>& rows, int ncols, std::uint32_t p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::uint32_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    /* In-place forward elimination; returns rank and pivot columns. */
    int echelon(std::vector<int>* pivot_cols = nullptr);

  private:
    int rows_, cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> a_;
};

int rank_mod(const std::vector<SparseRow>& rows, int ncols, std::uint32_t p);

/*
 * Incremental mod-p echelon used for greedy independent-subset selection:
 * insert returns true when the row enlarged the span.
 */
class ModEchelon {
  public:
    ModEchelon(int ncols, std::uint32_t p);
    bool insert(const SparseRow& r);
    int rank() const { return rank_; }

  private:
    int ncols_;
    std::uint32_t p_;
    int rank_ = 0;
    std::vector<std::vector<std::uint32_t>> rows_; // dense, normalized lead = 1
    std::vector<int> pivot_row_;                   // col -> row index or -1
};

} // namespace modp

} // namespace milnor
