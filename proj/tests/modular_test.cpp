#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "milnor/linalg.hpp"
#include "milnor/modular.hpp"

using namespace milnor;

namespace {

SparseRow make_row(const std::vector<long>& dense) {
    SparseRow r;
    for (int i = 0; i < static_cast<int>(dense.size()); ++i)
        if (dense[i] != 0) r.push(i, Int(dense[i]));
    return r;
}

} // namespace

TEST_CASE("prime table is a fixed set of large 31-bit primes") {
    const auto& ps = modp::primes();
    REQUIRE(ps.size() >= 8);
    std::set<std::uint32_t> seen;
    for (auto p : ps) {
        CHECK(p > (1u << 30));
        CHECK(p < (1u << 31));
        Int n(static_cast<unsigned long>(p));
        CHECK(mpz_probab_prime_p(n.get_mpz_t(), 40) != 0);
        seen.insert(p);
    }
    CHECK(seen.size() == ps.size()); // distinct
    CHECK(modp::primes()[0] == ps[0]); // deterministic across calls
}

TEST_CASE("modular inverse") {
    const std::uint32_t p = modp::primes()[0];
    for (std::uint32_t a : {1u, 2u, 12345u, p - 1}) {
        std::uint64_t inv = modp::inv_mod(a, p);
        CHECK((static_cast<std::uint64_t>(a) * inv) % p == 1);
    }
}

TEST_CASE("modular rank agrees with exact rank on random integer matrices") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dim(1, 7), val(-30, 30);
    const auto& ps = modp::primes();
    for (int trial = 0; trial < 40; ++trial) {
        int nr = dim(rng), nc = dim(rng);
        std::vector<SparseRow> rows;
        for (int i = 0; i < nr; ++i) {
            std::vector<long> dense(nc);
            for (auto& d : dense) d = val(rng);
            rows.push_back(make_row(dense));
        }
        int exact = rank_of_rows(rows, nc);
        for (std::size_t i = 0; i < 2; ++i) {
            int rp = modp::rank_mod(rows, nc, ps[i]);
            CHECK(rp <= exact);             // always a lower bound
            CHECK(rp == exact);             // equality is generic at 31-bit primes
        }
    }
}

TEST_CASE("rank detects designed modular collisions as lower bounds") {
    const std::uint32_t p = modp::primes()[0];
    // a 1x1 matrix whose single entry is the prime itself: rank 1 exactly,
    // rank 0 mod p
    SparseRow r;
    r.push(0, Int(static_cast<unsigned long>(p)));
    std::vector<SparseRow> rows{r};
    CHECK(rank_of_rows(rows, 1) == 1);
    CHECK(modp::rank_mod(rows, 1, p) == 0);
    CHECK(modp::rank_mod(rows, 1, modp::primes()[1]) == 1);
}

TEST_CASE("incremental modular echelon matches one-shot rank") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dim(2, 8), val(-9, 9);
    const std::uint32_t p = modp::primes()[2];
    for (int trial = 0; trial < 30; ++trial) {
        int nr = dim(rng), nc = dim(rng);
        std::vector<SparseRow> rows;
        for (int i = 0; i < nr; ++i) {
            std::vector<long> dense(nc);
            for (auto& d : dense) d = val(rng);
            rows.push_back(make_row(dense));
        }
        modp::ModEchelon ech(nc, p);
        int grew = 0;
        for (const auto& r : rows)
            if (ech.insert(r)) ++grew;
        CHECK(grew == modp::rank_mod(rows, nc, p));
        CHECK(ech.rank() == grew);
        // re-inserting anything already present never grows the rank
        for (const auto& r : rows) CHECK_FALSE(ech.insert(r));
    }
}

TEST_CASE("arithmetic mode names") {
    CHECK(std::string(mode_str(ArithmeticMode::Exact)) == "exact");
    CHECK(std::string(mode_str(ArithmeticMode::ModularVerify)) == "modular-verify");
    CHECK(std::string(mode_str(ArithmeticMode::ModularTrust)) == "modular-trust");
}
