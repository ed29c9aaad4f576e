#include "milnor/upoly.hpp"

#include <map>

#include "milnor/errors.hpp"

namespace milnor {

void UPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UPoly UPoly::tn_minus_1(int n) {
    if (n < 1) throw BadParameter("t^n - 1 needs n >= 1");
    UPoly p;
    p.c.assign(n + 1, Int(0));
    p.c[0] = -1;
    p.c[n] = 1;
    return p;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly::zero();
    UPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            mpz_addmul(r.c[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
    r.trim();
    return r;
}

UPoly upow(const UPoly& a, int n) {
    if (n < 0) throw BadParameter("negative polynomial power");
    UPoly r = UPoly::one();
    UPoly base = a;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

std::optional<UPoly> divexact(const UPoly& num, const UPoly& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return UPoly::zero();
    if (num.deg() < den.deg()) return std::nullopt;
    UPoly rem = num;
    UPoly quot;
    quot.c.assign(num.deg() - den.deg() + 1, Int(0));
    const Int& lead = den.c.back();
    while (!rem.is_zero() && rem.deg() >= den.deg()) {
        const int k = rem.deg() - den.deg();
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.c.back().get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return std::nullopt;
        quot.c[k] = q;
        for (std::size_t i = 0; i < den.c.size(); ++i)
            mpz_submul(rem.c[k + i].get_mpz_t(), q.get_mpz_t(), den.c[i].get_mpz_t());
        rem.trim(); // the leading term cancels exactly, so the degree drops
    }
    return rem.is_zero() ? std::optional<UPoly>(std::move(quot)) : std::nullopt;
}

UPoly cyclotomic(int n) {
    if (n < 1) throw BadParameter("cyclotomic index must be positive");
    static std::map<int, UPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    UPoly p = UPoly::tn_minus_1(n);
    for (int e = 1; e < n; ++e) {
        if (n % e != 0) continue;
        auto q = divexact(p, cyclotomic(e));
        if (!q) throw InternalError("cyclotomic recursion division failed");
        p = std::move(*q);
    }
    cache.emplace(n, p);
    return p;
}

std::string upoly_str(const UPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.deg(); i >= 0; --i) {
        const Int& v = p.c[i];
        if (v == 0) continue;
        Int mag = abs(v);
        if (s.empty()) {
            if (v < 0) s += "-";
        } else {
            s += (v < 0) ? "-" : "+";
        }
        if (i == 0) {
            s += int_str(mag);
        } else {
            if (mag != 1) s += int_str(mag) + "*";
            s += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace milnor
