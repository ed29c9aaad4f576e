#include "milnor/parser.hpp"

#include <cctype>
#include <map>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

/* Term map without a homogeneity constraint, used only while parsing. */
struct RawPoly {
    std::map<Monomial, Rat, MonoOrder> t;

    void add(const Monomial& m, const Rat& c) {
        auto [it, fresh] = t.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }
};

RawPoly add(const RawPoly& a, const RawPoly& b, int sign) {
    RawPoly r = a;
    for (const auto& [m, c] : b.t) r.add(m, sign * c);
    return r;
}

RawPoly mul(const RawPoly& a, const RawPoly& b) {
    RawPoly r;
    for (const auto& [ma, ca] : a.t)
        for (const auto& [mb, cb] : b.t) r.add(ma.times(mb), ca * cb);
    return r;
}

class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    RawPoly parse() {
        RawPoly p = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;
    bool last_atom_was_number_ = false;

    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError(what, static_cast<int>(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool starts_atom(char c) const {
        return c == '(' || c == 'x' || c == 'y' || c == 'z' ||
               std::isdigit(static_cast<unsigned char>(c));
    }

    RawPoly expr() {
        int sign = 1;
        char c = peek();
        if (c == '+' || c == '-') {
            if (c == '-') sign = -1;
            ++pos_;
        }
        RawPoly p = term();
        if (sign < 0) {
            RawPoly zero;
            p = add(zero, p, -1);
        }
        while (true) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                RawPoly q = term();
                p = add(p, q, c == '+' ? 1 : -1);
            } else {
                break;
            }
        }
        return p;
    }

    RawPoly term() {
        RawPoly p = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                p = mul(p, factor());
            } else if (starts_atom(c)) {
                // implicit product, except between two numeric literals
                if (last_atom_was_number_ && std::isdigit(static_cast<unsigned char>(c)))
                    fail("missing operator between numbers");
                p = mul(p, factor());
            } else {
                break;
            }
        }
        return p;
    }

    RawPoly factor() {
        RawPoly base = atom();
        while (peek() == '^') {
            ++pos_;
            int e = read_exponent();
            RawPoly r;
            r.add(Monomial{}, 1);
            for (int i = 0; i < e; ++i) r = mul(r, base);
            base = r;
            last_atom_was_number_ = false;
        }
        return base;
    }

    RawPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RawPoly p = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            last_atom_was_number_ = false;
            return p;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            RawPoly p;
            p.add(Monomial{c == 'x', c == 'y', c == 'z'}, 1);
            last_atom_was_number_ = false;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = read_integer();
            Int den = 1;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                std::size_t slash = pos_;
                ++pos_;
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    pos_ = slash;
                    fail("'/' is only valid inside a rational literal like 3/2");
                }
                den = read_integer();
                if (den == 0) fail("zero denominator");
            }
            RawPoly p;
            Rat v(num, den);
            v.canonicalize();
            p.add(Monomial{}, v);
            last_atom_was_number_ = true;
            return p;
        }
        fail(pos_ < s_.size() ? "unexpected character" : "unexpected end of input");
    }

    Int read_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Int(s_.substr(start, pos_ - start));
    }

    int read_exponent() {
        char c = peek();
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected an integer exponent");
        Int e = read_integer();
        if (e > 10000) fail("exponent too large");
        return static_cast<int>(e.get_si());
    }
};

} // namespace

HomogeneousPoly parse_poly(const std::string& text) {
    Parser parser(text);
    RawPoly raw = parser.parse();
    if (raw.t.empty()) return HomogeneousPoly(0);
    const int d = raw.t.begin()->first.degree();
    for (const auto& [m, c] : raw.t)
        if (m.degree() != d)
            throw NotHomogeneous("monomials of degrees " + std::to_string(d) + " and " +
                                 std::to_string(m.degree()) + " in the same polynomial");
    HomogeneousPoly p(d);
    for (const auto& [m, c] : raw.t) p.add_term(m, c);
    return p;
}

} // namespace milnor
