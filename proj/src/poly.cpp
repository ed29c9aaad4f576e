#include "milnor/poly.hpp"

#include <sstream>

#include "milnor/errors.hpp"

namespace milnor {

int space_dim(int k) {
    if (k < 0) return 0;
    return (k + 2) * (k + 1) / 2;
}

std::vector<Monomial> monomial_basis(int k) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    out.reserve(space_dim(k));
    for (int ex = k; ex >= 0; --ex)
        for (int ey = k - ex; ey >= 0; --ey) out.push_back({ex, ey, k - ex - ey});
    return out;
}

int monomial_index(const Monomial& m) {
    int s = m.degree() - m.ex; // entries in earlier ex-blocks: 1+2+...+s
    return s * (s + 1) / 2 + (s - m.ey);
}

HomogeneousPoly::HomogeneousPoly(int degree) : degree_(degree) {}

HomogeneousPoly HomogeneousPoly::monomial(const Monomial& m, const Rat& c) {
    HomogeneousPoly p(m.degree());
    p.add_term(m, c);
    return p;
}

void HomogeneousPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    if (m.degree() != degree_)
        throw DimensionMismatch("add_term: degree " + std::to_string(m.degree()) +
                                " into polynomial of degree " + std::to_string(degree_));
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HomogeneousPoly HomogeneousPoly::operator+(const HomogeneousPoly& o) const {
    if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
        throw DimensionMismatch("sum of degrees " + std::to_string(degree_) + " and " +
                                std::to_string(o.degree_));
    HomogeneousPoly out = *this;
    if (out.is_zero()) out.degree_ = o.degree_;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

HomogeneousPoly HomogeneousPoly::operator-(const HomogeneousPoly& o) const {
    return *this + o.scaled(Rat(-1));
}

HomogeneousPoly HomogeneousPoly::operator-() const {
    return scaled(Rat(-1));
}

HomogeneousPoly HomogeneousPoly::operator*(const HomogeneousPoly& o) const {
    HomogeneousPoly out(degree_ + o.degree_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add_term(m1.times(m2), c1 * c2);
    return out;
}

HomogeneousPoly HomogeneousPoly::scaled(const Rat& c) const {
    HomogeneousPoly out(degree_);
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

bool HomogeneousPoly::operator==(const HomogeneousPoly& o) const {
    if (is_zero() && o.is_zero()) return true;
    return degree_ == o.degree_ && terms_ == o.terms_;
}

HomogeneousPoly HomogeneousPoly::partial(Var v) const {
    HomogeneousPoly out(degree_ - 1);
    for (const auto& [m, c] : terms_) {
        Monomial d = m;
        int e = 0;
        switch (v) {
            case Var::X: e = m.ex; --d.ex; break;
            case Var::Y: e = m.ey; --d.ey; break;
            case Var::Z: e = m.ez; --d.ez; break;
        }
        if (e > 0) out.add_term(d, c * e);
    }
    return out;
}

std::vector<Rat> HomogeneousPoly::coord_vector() const {
    std::vector<Rat> v(space_dim(degree_), Rat(0));
    for (const auto& [m, c] : terms_) v[monomial_index(m)] = c;
    return v;
}

SparseRow HomogeneousPoly::coord_row() const {
    return row_from_rat(coord_vector());
}

HomogeneousPoly HomogeneousPoly::from_coords(int degree, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != space_dim(degree))
        throw DimensionMismatch("from_coords: length " + std::to_string(v.size()) +
                                " for degree " + std::to_string(degree));
    HomogeneousPoly out(degree);
    auto basis = monomial_basis(degree);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.terms_.emplace(basis[i], v[i]);
    return out;
}

HomogeneousPoly HomogeneousPoly::primitive_integer_form() const {
    if (is_zero()) return *this;
    Int l = 1, g = 0;
    for (const auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [m, c] : terms_) {
        Int t = l / c.get_den() * c.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
        if (g == 1) break;
    }
    Rat scale(l, g);
    scale.canonicalize();
    if (terms_.begin()->second * scale < 0) scale = -scale;
    return scaled(scale);
}

std::string HomogeneousPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = m.degree() > 0;
        if (a != 1 || !has_vars) {
            os << rat_str(a);
            if (has_vars) os << "*";
        }
        bool star = false;
        auto put = [&](const char* v, int e) {
            if (e == 0) return;
            if (star) os << "*";
            os << v;
            if (e > 1) os << "^" << e;
            star = true;
        };
        put("x", m.ex);
        put("y", m.ey);
        put("z", m.ez);
    }
    return os.str();
}

std::array<HomogeneousPoly, 3> partials(const HomogeneousPoly& f) {
    return {f.partial(Var::X), f.partial(Var::Y), f.partial(Var::Z)};
}

HomogeneousPoly mono_poly(int ex, int ey, int ez, long num, long den) {
    Rat c(num, den);
    c.canonicalize();
    return HomogeneousPoly::monomial({ex, ey, ez}, c);
}

} // namespace milnor
