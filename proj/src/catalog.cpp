#include "milnor/catalog.hpp"

#include "milnor/errors.hpp"
#include "milnor/syzygy.hpp"

namespace milnor {

using nlohmann::ordered_json;

HomogeneousPoly poly_pow(const HomogeneousPoly& base, int e) {
    if (e < 0) throw BadParameter("negative polynomial power");
    HomogeneousPoly r = mono_poly(0, 0, 0);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"A", "triple-pencil line arrangement (x^m-y^m)(x^m-z^m)(y^m-z^m)", "m", 4, 2},
        {"hessian", "the 12-line Hessian arrangement xyz((x^3+y^3+z^3)^3-27x^3y^3z^3)", "", 0, 0},
        {"C5m", "the quintic-power family (y^m*z^m-x^2m)^2*y^m-x^5m", "m", 2, 1},
        {"E14", "rational cuspidal sextic (xz-y^2)^3-x^2*y^4", "", 0, 0},
        {"nine-cusp-sextic", "dual sextic x^6+y^6+z^6-2(x^3y^3+x^3z^3+y^3z^3)", "", 0, 0},
        {"zariski-sextic", "six-cusp sextic (x^2+y^2)^3+(y^3+z^3)^2", "", 0, 0},
        {"torus-3-4", "torus-type curve (x^3+y^3)^4+(y^4+z^4)^3", "", 0, 0},
        {"fermat", "smooth control x^d+y^d+z^d", "d", 4, 1},
    };
    return entries;
}

namespace {

const CatalogEntry& find_entry(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return e;
    std::string known;
    for (const auto& e : catalog_entries()) known += (known.empty() ? "" : ", ") + e.id;
    throw UnknownCurve("no catalog entry '" + id + "' (known: " + known + ")");
}

int resolve_param(const CatalogEntry& e, std::optional<int> m, std::optional<int> d) {
    if (e.param.empty()) {
        if (m || d) throw BadParameter("catalog curve '" + e.id + "' takes no parameter");
        return 0;
    }
    std::optional<int> given = (e.param == "m") ? m : d;
    std::optional<int> other = (e.param == "m") ? d : m;
    if (other) throw BadParameter("catalog curve '" + e.id + "' takes --" + e.param + " only");
    int v = given.value_or(e.default_param);
    if (v < e.min_param)
        throw BadParameter("catalog curve '" + e.id + "' needs " + e.param +
                           " >= " + std::to_string(e.min_param));
    return v;
}

HomogeneousPoly var_pow(int which, int e) {
    return mono_poly(which == 0 ? e : 0, which == 1 ? e : 0, which == 2 ? e : 0);
}

} // namespace

HomogeneousPoly catalog_poly(const std::string& id, std::optional<int> m, std::optional<int> d) {
    const CatalogEntry& e = find_entry(id);
    const int p = resolve_param(e, m, d);
    HomogeneousPoly x = var_pow(0, 1), y = var_pow(1, 1), z = var_pow(2, 1);
    if (e.id == "A") {
        HomogeneousPoly xm = var_pow(0, p), ym = var_pow(1, p), zm = var_pow(2, p);
        return (xm - ym) * (xm - zm) * (ym - zm);
    }
    if (e.id == "hessian") {
        HomogeneousPoly c1 = poly_pow(x, 3) + poly_pow(y, 3) + poly_pow(z, 3);
        HomogeneousPoly mix = mono_poly(3, 3, 3, -27);
        return x * y * z * (poly_pow(c1, 3) + mix);
    }
    if (e.id == "C5m") {
        HomogeneousPoly inner = mono_poly(0, p, p) - mono_poly(2 * p, 0, 0);
        return poly_pow(inner, 2) * var_pow(1, p) - var_pow(0, 5 * p);
    }
    if (e.id == "E14") {
        HomogeneousPoly inner = mono_poly(1, 0, 1) - mono_poly(0, 2, 0);
        return poly_pow(inner, 3) - mono_poly(2, 4, 0);
    }
    if (e.id == "nine-cusp-sextic") {
        return mono_poly(6, 0, 0) + mono_poly(0, 6, 0) + mono_poly(0, 0, 6) +
               mono_poly(3, 3, 0, -2) + mono_poly(3, 0, 3, -2) + mono_poly(0, 3, 3, -2);
    }
    if (e.id == "zariski-sextic") {
        HomogeneousPoly q = mono_poly(2, 0, 0) + mono_poly(0, 2, 0);
        HomogeneousPoly cub = mono_poly(0, 3, 0) + mono_poly(0, 0, 3);
        return poly_pow(q, 3) + poly_pow(cub, 2);
    }
    if (e.id == "torus-3-4") {
        HomogeneousPoly u = mono_poly(3, 0, 0) + mono_poly(0, 3, 0);
        HomogeneousPoly v = mono_poly(0, 4, 0) + mono_poly(0, 0, 4);
        return poly_pow(u, 4) + poly_pow(v, 3);
    }
    // fermat
    return var_pow(0, p) + var_pow(1, p) + var_pow(2, p);
}

std::optional<int> catalog_components(const std::string& id, std::optional<int> m,
                                      std::optional<int> d) {
    const CatalogEntry& e = find_entry(id);
    const int p = resolve_param(e, m, d);
    if (e.id == "A") return 3 * p;          // 3m concurrent-free lines
    if (e.id == "hessian") return 12;       // four triangles
    if (e.id == "C5m") return p % 2 == 0 ? 2 : 1;
    return 1;                               // the remaining curves are irreducible
}

CurveInput catalog_build(const std::string& id, std::optional<int> m, std::optional<int> d,
                         const AnalysisOptions& opts) {
    return validate(catalog_poly(id, m, d), catalog_components(id, m, d), opts);
}

nlohmann::ordered_json catalog_facts(const std::string& id, std::optional<int> m,
                                     std::optional<int> d) {
    const CatalogEntry& e = find_entry(id);
    const int p = resolve_param(e, m, d);
    ordered_json f;
    f["id"] = e.id;
    if (!e.param.empty()) f["param"] = ordered_json{{e.param, p}};

    auto classification = [](const std::string& kind, int d1, int d2) {
        return ordered_json{{"kind", kind}, {"d1", d1}, {"d2", d2}};
    };
    auto epsilon_facts = [](int lo, int hi, std::vector<std::pair<int, int>> nz) {
        ordered_json nzj = ordered_json::object();
        for (auto& [q, v] : nz) nzj[std::to_string(q)] = v;
        return ordered_json{{"range", {lo, hi}}, {"nonzero", nzj}};
    };
    auto delta1_facts = [](std::vector<std::pair<int, int>> factors, const std::string& disp) {
        ordered_json fj = ordered_json::array();
        for (auto& [ee, mm] : factors) fj.push_back({ee, mm});
        return ordered_json{{"factors", fj}, {"display", disp}};
    };
    auto all_divisors_once = [](int n) {
        std::vector<std::pair<int, int>> out;
        for (int ee = 1; ee <= n; ++ee)
            if (n % ee == 0) out.emplace_back(ee, 1);
        return out;
    };

    if (e.id == "A") {
        const int deg = 3 * p;
        f["degree"] = deg;
        f["components"] = 3 * p;
        f["classification"] =
            classification("Free", std::min(p + 1, 2 * p - 2), std::max(p + 1, 2 * p - 2));
        f["generator_degrees"] = {std::min(p + 1, 2 * p - 2), std::max(p + 1, 2 * p - 2)};
        f["tjurina"] = free_tjurina(deg, p + 1, 2 * p - 2);
        if (p >= 4) {
            int e13 = (p % 3 == 0) ? 2 : 1;
            f["epsilon"] = epsilon_facts(
                3, 6 * p, {{2 * p, e13}, {3 * p, 3 * p - 1}, {4 * p, e13}});
        }
    } else if (e.id == "hessian") {
        f["degree"] = 12;
        f["components"] = 12;
        f["classification"] = classification("Free", 4, 7);
        f["generator_degrees"] = {4, 7};
        f["tjurina"] = free_tjurina(12, 4, 7);
        f["alexander_intervals"] = {{"6", {1, 2}}};
        f["h2f"] = {{"16", 2}};
    } else if (e.id == "C5m") {
        const int deg = 5 * p;
        f["degree"] = deg;
        f["components"] = p % 2 == 0 ? 2 : 1;
        f["classification"] =
            classification("Free", std::min(2 * p, 3 * p - 1), std::max(2 * p, 3 * p - 1));
        f["generator_degrees"] = {std::min(2 * p, 3 * p - 1), std::max(2 * p, 3 * p - 1)};
        f["tjurina"] = free_tjurina(deg, 2 * p, 3 * p - 1);
        if (p % 2 == 0) {
            std::vector<std::pair<int, int>> nz;
            for (int k = deg / 2 + 1; k <= deg - 1; ++k) nz.emplace_back(k, 1);
            f["epsilon"] = epsilon_facts(1, deg - 1, nz);
            f["delta1"] = delta1_facts(all_divisors_once(deg),
                                       "t^" + std::to_string(deg) + "-1");
        } else {
            f["epsilon"] = epsilon_facts(1, deg - 1, {});
            f["delta1"] = delta1_facts({}, "1");
        }
    } else if (e.id == "E14") {
        f["degree"] = 6;
        f["components"] = 1;
        f["classification"] = classification("Free", 2, 3);
        f["generator_degrees"] = {2, 3};
        f["tjurina"] = free_tjurina(6, 2, 3);
        std::vector<std::pair<int, int>> nz = {{5, 1}, {7, 1}, {10, 1}, {11, 1}, {12, 1}};
        for (int q = 13; q <= 18; ++q) nz.emplace_back(q, 1); // stable tail mu - tau = 1
        f["epsilon"] = epsilon_facts(3, 18, nz);
        f["delta1"] = delta1_facts({{6, 1}}, "t^2-t+1");
    } else if (e.id == "nine-cusp-sextic") {
        f["degree"] = 6;
        f["components"] = 1;
        f["classification"] = classification("NearlyFree", 3, 3);
        f["generator_degrees"] = {3, 3, 3};
        f["tjurina"] = nearly_free_tjurina(6, 3, 3);
        f["epsilon"] = epsilon_facts(3, 12, {{5, 3}, {7, 3}});
        f["delta1"] = delta1_facts({{6, 3}}, "(t^2-t+1)^3");
    } else if (e.id == "zariski-sextic") {
        f["degree"] = 6;
        f["components"] = 1;
        f["classification"] = {{"kind", "Other"}};
        f["generator_degrees"] = {3, 5, 5, 5};
        f["tjurina"] = 12; // six ordinary cusps
        f["epsilon"] = epsilon_facts(1, 6, {{5, 1}});
        f["delta1"] = delta1_facts({{6, 1}}, "t^2-t+1");
    } else if (e.id == "torus-3-4") {
        f["degree"] = 12;
        f["components"] = 1;
        f["classification"] = {{"kind", "Other"}};
        f["generators_upto"] = {{"jmax", 10}, {"degrees", {3}}};
        f["tjurina"] = 72; // twelve E6 points
        f["epsilon"] = epsilon_facts(1, 12, {{7, 1}, {10, 1}, {11, 1}});
        f["delta1"] = delta1_facts({{6, 1}, {12, 1}}, "(t^2-t+1)*(t^4-t^2+1)");
    } else { // fermat
        f["degree"] = p;
        f["components"] = 1;
        f["classification"] = {{"kind", "Other"}};
        f["generator_degrees"] = {p - 1, p - 1, p - 1};
        f["tjurina"] = 0;
        f["epsilon"] = epsilon_facts(1, 2 * p, {});
        f["delta1"] = delta1_facts({}, "1");
    }
    return f;
}

} // namespace milnor
