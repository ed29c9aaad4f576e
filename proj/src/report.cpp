#include "milnor/report.hpp"

#include <iomanip>
#include <sstream>

namespace milnor {

using nlohmann::ordered_json;

std::string two_form_str(const SyzygyTriple& t) {
    return "(" + t.a.str() + ") dy^dz + (" + (-t.b).str() + ") dx^dz + (" + t.c.str() +
           ") dx^dy";
}

std::string one_form_str(const std::array<HomogeneousPoly, 3>& f) {
    return "(" + f[0].str() + ") dx + (" + f[1].str() + ") dy + (" + f[2].str() + ") dz";
}

std::string triple_str(const SyzygyTriple& t) {
    return "(" + t.a.str() + ", " + t.b.str() + ", " + t.c.str() + ")";
}

static ordered_json classification_json(const AnalysisReport& r) {
    ordered_json c;
    if (r.inconclusive) {
        c["kind"] = "Inconclusive";
        c["message"] = *r.inconclusive;
        if (r.profile) c["degrees"] = r.profile->degrees;
        return c;
    }
    const Classification& cl = *r.classification;
    c["kind"] = class_str(cl.kind);
    if (cl.kind != CurveClass::Other) {
        c["d1"] = cl.d1;
        c["d2"] = cl.d2;
    }
    c["degrees"] = cl.degrees;
    return c;
}

nlohmann::ordered_json report_json(const AnalysisReport& r) {
    ordered_json j;
    j["schema"] = 1;
    j["input"]["poly"] = r.poly;
    j["input"]["degree"] = r.degree;
    if (r.components) j["input"]["components"] = *r.components;
    if (r.tjurina) j["tjurina"] = *r.tjurina;
    if (r.classification || r.inconclusive) j["classification"] = classification_json(r);
    if (r.profile) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : r.profile->rows)
            rows.push_back({{"j", row.j}, {"dim_ar", row.dim}, {"new_gens", row.new_gens}});
        j["generator_profile"] = rows;
    }
    if (!r.generators.empty()) {
        ordered_json gens = ordered_json::array();
        for (const auto& [deg, triples] : r.generators) {
            ordered_json g;
            g["j"] = deg;
            ordered_json ts = ordered_json::array();
            for (const auto& t : triples)
                ts.push_back({{"a", t.a.str()}, {"b", t.b.str()}, {"c", t.c.str()}});
            g["triples"] = ts;
            gens.push_back(g);
        }
        j["generators"] = gens;
    }
    if (r.e2) {
        ordered_json cells = ordered_json::array();
        for (const auto& c : *r.e2)
            cells.push_back({{"q", c.q},
                             {"t", c.t},
                             {"k", c.k},
                             {"dim_syz", c.dim_syz},
                             {"dim_kr", c.dim_kr},
                             {"kappa", c.kappa},
                             {"epsilon", c.epsilon}});
        j["e2"] = cells;
    }
    if (r.alex) {
        ordered_json a;
        a["certified"] = r.alex->certified;
        if (r.alex->unity_multiplicity) a["unity_multiplicity"] = *r.alex->unity_multiplicity;
        ordered_json bounds = ordered_json::array();
        for (const auto& b : r.alex->bounds)
            bounds.push_back(
                {{"k", b.k}, {"lower", b.lower}, {"upper", b.upper}, {"exact", b.exact}});
        a["bounds"] = bounds;
        if (r.alex->certified) {
            a["delta1"] = factorization_display(r.alex->factors);
            ordered_json cyc = ordered_json::array();
            for (const auto& [e, m] : r.alex->factors) cyc.push_back({{"e", e}, {"mult", m}});
            a["cyclotomic"] = cyc;
        }
        if (r.delta02) {
            a["delta0"] = upoly_str(r.delta02->first);
            a["delta2"] = upoly_str(r.delta02->second);
        }
        j["alexander"] = a;
    }
    if (r.witnesses) {
        ordered_json ws = ordered_json::array();
        for (const auto& w : *r.witnesses)
            ws.push_back({{"q", w.q},
                          {"closed", w.closed},
                          {"two_form", two_form_str(w.rho)},
                          {"one_form", one_form_str(w.one_form)}});
        j["witnesses"] = ws;
    }
    j["meta"]["arithmetic_mode"] = r.arithmetic_mode;
    j["meta"]["elapsed_ms"] = r.elapsed_ms;
    if (r.probabilistic) j["meta"]["probabilistic"] = true;
    return j;
}

std::string report_csv(const AnalysisReport& r) {
    std::ostringstream os;
    os << "q,t,k,dim_syz,dim_kr,kappa,epsilon\n";
    if (r.e2)
        for (const auto& c : *r.e2)
            os << c.q << ',' << c.t << ',' << c.k << ',' << c.dim_syz << ',' << c.dim_kr << ','
               << c.kappa << ',' << c.epsilon << '\n';
    return os.str();
}

std::string report_table(const AnalysisReport& r) {
    std::ostringstream os;
    os << "input: " << r.poly << "\n";
    os << "degree: " << r.degree;
    if (r.components) os << "   components: " << *r.components;
    os << "\n";
    if (r.tjurina) os << "tjurina: " << *r.tjurina << "\n";
    if (r.inconclusive) {
        os << "classification: inconclusive (" << *r.inconclusive << ")\n";
    } else if (r.classification) {
        const auto& cl = *r.classification;
        os << "classification: " << class_str(cl.kind);
        if (cl.kind != CurveClass::Other) os << "(" << cl.d1 << "," << cl.d2 << ")";
        os << "   generator degrees:";
        for (int g : cl.degrees) os << " " << g;
        os << "\n";
    }
    if (r.profile) {
        os << "generator profile (jmax " << r.profile->jmax << "):\n";
        os << "    j   dim AR   new generators\n";
        for (const auto& row : r.profile->rows)
            os << "  " << std::setw(3) << row.j << "   " << std::setw(6) << row.dim << "   "
               << std::setw(4) << row.new_gens << "\n";
        if (r.profile->boundary_warning)
            os << "  warning: generators at the search bound; raise --jmax\n";
    }
    for (const auto& [deg, triples] : r.generators)
        for (const auto& t : triples) os << "generator at j=" << deg << ": " << triple_str(t) << "\n";
    if (r.e2) {
        os << "page-two table:\n";
        os << "    q   t   k   dim_syz   dim_kr   kappa   epsilon\n";
        for (const auto& c : *r.e2)
            os << "  " << std::setw(3) << c.q << " " << std::setw(3) << c.t << " " << std::setw(3)
               << c.k << "   " << std::setw(7) << c.dim_syz << "   " << std::setw(6) << c.dim_kr
               << "   " << std::setw(5) << c.kappa << "   " << std::setw(7) << c.epsilon << "\n";
    }
    if (r.alex) {
        os << "alexander:\n";
        os << "  certified: " << (r.alex->certified ? "yes" : "no") << "\n";
        if (r.alex->unity_multiplicity)
            os << "  unity multiplicity: " << *r.alex->unity_multiplicity << "\n";
        if (r.alex->certified)
            os << "  delta1 = " << factorization_display(r.alex->factors) << "\n";
        for (const auto& b : r.alex->bounds) {
            os << "  k=" << b.k << ": [" << b.lower << "," << b.upper << "]"
               << (b.exact ? " exact" : " interval") << "\n";
        }
        if (r.delta02) {
            os << "  delta0 = " << upoly_str(r.delta02->first) << "\n";
            os << "  delta2 = " << upoly_str(r.delta02->second) << "\n";
        }
    }
    if (r.witnesses) {
        for (const auto& w : *r.witnesses) {
            os << "witness q=" << w.q << (w.closed ? " (closed)" : "") << ":\n";
            os << "  omega = " << two_form_str(w.rho) << "\n";
            os << "  contraction = " << one_form_str(w.one_form) << "\n";
        }
    }
    os << "mode: " << r.arithmetic_mode;
    if (r.probabilistic) os << " (probabilistic)";
    os << "   elapsed: " << r.elapsed_ms << " ms\n";
    return os.str();
}

nlohmann::ordered_json error_json(const std::string& type, const std::string& message) {
    ordered_json j;
    j["schema"] = 1;
    j["error"] = {{"type", type}, {"message", message}};
    return j;
}

} // namespace milnor
