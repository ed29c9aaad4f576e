#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "milnor/catalog.hpp"
#include "milnor/errors.hpp"
#include "milnor/parser.hpp"
#include "milnor/report.hpp"

namespace {

using namespace milnor;

struct CommonOpts {
    std::string expr;
    std::string catalog_id;
    std::optional<int> m, d, components, chi_u;
    int qmax = -1;
    int jmax = -1;
    std::string modular = "off";
    std::string format = "table";
    bool with_witnesses = false;
    bool allow_intervals = false;
    bool allow_small_degree = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool input_required = true) {
    auto* f = cmd->add_option("-f,--poly", o.expr, "polynomial in x,y,z");
    auto* cat = cmd->add_option("--catalog", o.catalog_id, "built-in curve identifier");
    if (input_required) {
        f->excludes(cat);
        cat->excludes(f);
    }
    cmd->add_option("-m,--m", o.m, "family parameter m");
    cmd->add_option("-d,--d", o.d, "family parameter d");
    cmd->add_option("-r,--components", o.components, "number of irreducible components r");
    cmd->add_option("--chi-u", o.chi_u, "Euler characteristic of the complement");
    cmd->add_option("--qmax", o.qmax, "largest form-degree for the page-two table");
    cmd->add_option("--jmax", o.jmax, "generator search bound");
    cmd->add_option("--modular", o.modular, "off|verify|trust")
        ->check(CLI::IsMember({"off", "verify", "trust"}));
    cmd->add_option("--format", o.format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_flag("--witnesses", o.with_witnesses, "emit closed 2-form witnesses");
    cmd->add_flag("--allow-intervals", o.allow_intervals,
                  "accept uncertified interval output (exit 0)");
    cmd->add_flag("--allow-small-degree", o.allow_small_degree, "permit degree < 3");
}

AnalysisOptions analysis_options(const CommonOpts& o) {
    AnalysisOptions a;
    if (o.modular == "verify") a.mode = ArithmeticMode::ModularVerify;
    if (o.modular == "trust") a.mode = ArithmeticMode::ModularTrust;
    a.allow_small_degree = o.allow_small_degree;
    return a;
}

CurveInput load_curve(const CommonOpts& o, const AnalysisOptions& aopts) {
    if (!o.expr.empty()) {
        return validate(parse_poly(o.expr), o.components, aopts);
    }
    if (!o.catalog_id.empty()) {
        std::optional<int> r = o.components;
        if (!r) r = catalog_components(o.catalog_id, o.m, o.d);
        return validate(catalog_poly(o.catalog_id, o.m, o.d), r, aopts);
    }
    throw BadParameter("provide a polynomial with -f or a catalog curve with --catalog");
}

void emit(const AnalysisReport& rep, const std::string& format) {
    if (format == "json")
        std::cout << report_json(rep).dump(2) << "\n";
    else if (format == "csv")
        std::cout << report_csv(rep);
    else
        std::cout << report_table(rep);
}

int run_command(const std::string& cmd, const CommonOpts& o) {
    const auto t0 = std::chrono::steady_clock::now();
    AnalysisOptions aopts = analysis_options(o);
    CurveInput curve = load_curve(o, aopts);

    AnalysisReport rep;
    rep.poly = curve.f().str();
    rep.degree = curve.degree();
    rep.components = curve.components();
    rep.arithmetic_mode = mode_str(aopts.mode);

    int exit_code = 0;
    const bool full = (cmd == "analyze");

    if (full || cmd == "tjurina") rep.tjurina = curve.tjurina();

    if (full || cmd == "classify" || cmd == "syzygies") {
        const int jmax = o.jmax >= 0 ? o.jmax : std::max(1, 2 * curve.degree() - 2);
        rep.profile = generator_profile(curve, jmax, aopts);
        try {
            rep.classification = classify(curve, aopts, jmax);
        } catch (const InconclusiveBound& e) {
            rep.inconclusive = e.what();
            exit_code = 3;
        }
        if (cmd == "syzygies") {
            for (const auto& row : rep.profile->rows)
                if (row.new_gens > 0)
                    rep.generators.emplace_back(row.j,
                                                minimal_generators(curve, row.j, aopts));
        }
    }

    if (full || cmd == "e2") {
        rep.e2 = e2_table(curve, o.qmax, aopts);
    }

    if (full || cmd == "alexander") {
        rep.alex = alexander(curve, aopts);
        if (rep.alex->certified && o.chi_u)
            rep.delta02 = delta0_delta2(curve, *o.chi_u, *rep.alex);
        if (!rep.alex->certified && !o.allow_intervals) exit_code = 3;
    }

    if (cmd == "witnesses" || ((full || cmd == "e2") && o.with_witnesses)) {
        const int hi = o.qmax >= 0 ? o.qmax : curve.degree();
        std::vector<WitnessForm> ws;
        for (int q = 3; q <= hi; ++q)
            for (auto& w : closed_syzygy_space(curve, q, aopts)) ws.push_back(std::move(w));
        rep.witnesses = std::move(ws);
    }

    rep.probabilistic = curve.probabilistic();
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    emit(rep, o.format);
    return exit_code;
}

int run_catalog(const std::string& action, const CommonOpts& o) {
    if (action == "list") {
        if (o.format == "json") {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (const auto& e : catalog_entries()) {
                nlohmann::ordered_json row;
                row["id"] = e.id;
                row["summary"] = e.summary;
                if (!e.param.empty()) {
                    row["param"] = e.param;
                    row["default"] = e.default_param;
                    row["min"] = e.min_param;
                }
                j.push_back(row);
            }
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& e : catalog_entries()) {
                std::cout << e.id;
                if (!e.param.empty())
                    std::cout << " (--" << e.param << ", default " << e.default_param << ")";
                std::cout << ": " << e.summary << "\n";
            }
        }
        return 0;
    }
    if (action == "facts") {
        std::string id = o.catalog_id;
        if (id.empty()) throw BadParameter("catalog facts needs --catalog <id>");
        std::cout << catalog_facts(id, o.m, o.d).dump(2) << "\n";
        return 0;
    }
    throw BadParameter("catalog action must be 'list' or 'facts'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded syzygy, spectral-page and Alexander-polynomial calculator for "
                 "reduced plane curves"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> analysis_cmds = {
        {"analyze", "full report: classification, generators, page table, Alexander data"},
        {"alexander", "multiplicity bounds and, when certified, the Alexander polynomial"},
        {"e2", "graded page-two table (q, t, k, dim_syz, dim_kr, kappa, epsilon)"},
        {"syzygies", "relation-module dimensions and minimal generators by degree"},
        {"classify", "free / nearly-free / other, with exponents and generator degrees"},
        {"witnesses", "closed 2-form witnesses with their Euler contractions"},
        {"tjurina", "global Tjurina number of the curve"},
    };
    std::map<std::string, CommonOpts> opts;
    for (const auto& [name, help] : analysis_cmds) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub, opts[name]);
    }
    auto* cat = app.add_subcommand("catalog", "list built-in curves or dump expected facts");
    std::string action;
    cat->add_option("action", action, "list|facts")->required();
    add_common(cat, opts["catalog"], false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    std::string cmd;
    for (auto* sub : app.get_subcommands()) cmd = sub->get_name();
    const CommonOpts& o = opts[cmd];

    try {
        if (cmd == "catalog") return run_catalog(action, o);
        return run_command(cmd, o);
    } catch (const InconclusiveBound& e) {
        if (o.format == "json")
            std::cout << error_json("InconclusiveBound", e.what()).dump(2) << "\n";
        else
            std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    } catch (const Uncertified& e) {
        if (o.format == "json")
            std::cout << error_json("Uncertified", e.what()).dump(2) << "\n";
        else
            std::cerr << "uncertified: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const OrbitInconsistency& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::string type = "InvalidInput";
        if (dynamic_cast<const SyntaxError*>(&e)) type = "SyntaxError";
        else if (dynamic_cast<const NotHomogeneous*>(&e)) type = "NotHomogeneous";
        else if (dynamic_cast<const DegreeTooSmall*>(&e)) type = "DegreeTooSmall";
        else if (dynamic_cast<const NonIsolatedSingularities*>(&e)) type = "NonIsolatedSingularities";
        else if (dynamic_cast<const UnknownCurve*>(&e)) type = "UnknownCurve";
        else if (dynamic_cast<const BadParameter*>(&e)) type = "BadParameter";
        else if (dynamic_cast<const NonPolynomialResult*>(&e)) type = "NonPolynomialResult";
        if (o.format == "json")
            std::cout << error_json(type, e.what()).dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}
