#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "milnor/linalg.hpp"

namespace milnor {

/* Monomial x^ex * y^ey * z^ez in Q[x,y,z]. */
struct Monomial {
    int ex = 0, ey = 0, ez = 0;

    int degree() const { return ex + ey + ez; }
    bool operator==(const Monomial& o) const { return ex == o.ex && ey == o.ey && ez == o.ez; }

    Monomial times(const Monomial& o) const { return {ex + o.ex, ey + o.ey, ez + o.ez}; }
};

/*
 * Canonical monomial order: graded, then lexicographic with x > y > z in the
 * usual descending convention, so basis(k) starts at x^k and ends at z^k.
 */
struct MonoOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.ex != b.ex) return a.ex > b.ex;
        return a.ey > b.ey;
    }
};

/* dim Q[x,y,z]_k = C(k+2,2); zero for k < 0. */
int space_dim(int k);

/* The canonical ordered monomial basis of degree k (basis(k)[0] = x^k). */
std::vector<Monomial> monomial_basis(int k);

/* Position of m inside monomial_basis(m.degree()), O(1). */
int monomial_index(const Monomial& m);

enum class Var { X = 0, Y = 1, Z = 2 };

/*
 * Homogeneous element of Q[x,y,z]: sparse term map in the canonical order.
 * The zero polynomial carries a nominal degree so graded arithmetic can
 * check compatibility.
 */
class HomogeneousPoly {
  public:
    explicit HomogeneousPoly(int degree = 0);
    static HomogeneousPoly monomial(const Monomial& m, const Rat& c);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat, MonoOrder>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c); // accumulates, drops zeros

    HomogeneousPoly operator+(const HomogeneousPoly& o) const;
    HomogeneousPoly operator-(const HomogeneousPoly& o) const;
    HomogeneousPoly operator-() const;
    HomogeneousPoly operator*(const HomogeneousPoly& o) const;
    HomogeneousPoly scaled(const Rat& c) const;
    bool operator==(const HomogeneousPoly& o) const;

    HomogeneousPoly partial(Var v) const; // degree d-1

    /* Coefficient vector against monomial_basis(degree()). */
    std::vector<Rat> coord_vector() const;
    SparseRow coord_row() const; // primitive integer form
    static HomogeneousPoly from_coords(int degree, const std::vector<Rat>& v);

    /* Multiply every coefficient by the lcm of denominators, strip content. */
    HomogeneousPoly primitive_integer_form() const;

    std::string str() const; // canonical text, parse-compatible

  private:
    int degree_;
    std::map<Monomial, Rat, MonoOrder> terms_;
};

std::array<HomogeneousPoly, 3> partials(const HomogeneousPoly& f);

HomogeneousPoly mono_poly(int ex, int ey, int ez, long num = 1, long den = 1);

} // namespace milnor
