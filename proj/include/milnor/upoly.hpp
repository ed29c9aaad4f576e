#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milnor/linalg.hpp"

namespace milnor {

/*
 * Integer polynomial in one variable t, coefficients ascending by power,
 * normalized with no trailing zeros (zero polynomial = empty vector).
 */
struct UPoly {
    std::vector<Int> c;

    static UPoly zero() { return {}; }
    static UPoly one() { return UPoly{{Int(1)}}; }
    /* t^n - 1 */
    static UPoly tn_minus_1(int n);

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim();

    bool operator==(const UPoly& o) const { return c == o.c; }
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly upow(const UPoly& a, int n);

/* Exact division; nullopt when the quotient is not an integer polynomial. */
std::optional<UPoly> divexact(const UPoly& num, const UPoly& den);

/* n-th cyclotomic polynomial, by exact division of t^n - 1. */
UPoly cyclotomic(int n);

/* Canonical text, descending powers: "t^4-t^2+1", "1", "-2*t+3". */
std::string upoly_str(const UPoly& p);

} // namespace milnor
