#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "milnor/alexander.hpp"

namespace milnor {

/*
 * Everything a command produced, ready for serialization.  Sections are
 * optional so focused subcommands reuse the same shape; the JSON emitter
 * follows the stable schema (field "schema": 1).
 */
struct AnalysisReport {
    std::string poly;
    int degree = 0;
    std::optional<int> components;

    std::optional<int> tjurina;
    std::optional<Classification> classification;
    std::optional<std::string> inconclusive; // boundary-warning text, if hit
    std::optional<GeneratorProfile> profile;
    std::vector<std::pair<int, std::vector<SyzygyTriple>>> generators; // per degree

    std::optional<std::vector<SpectralCell>> e2;
    std::optional<AlexanderResult> alex;
    std::optional<std::pair<UPoly, UPoly>> delta02;
    std::optional<std::vector<WitnessForm>> witnesses;

    std::string arithmetic_mode = "exact";
    bool probabilistic = false;
    long long elapsed_ms = 0;
};

std::string two_form_str(const SyzygyTriple& t);
std::string one_form_str(const std::array<HomogeneousPoly, 3>& f);
std::string triple_str(const SyzygyTriple& t);

nlohmann::ordered_json report_json(const AnalysisReport& r);
std::string report_csv(const AnalysisReport& r);
std::string report_table(const AnalysisReport& r);

/* Structured error object ({"schema":1, "error": {...}}). */
nlohmann::ordered_json error_json(const std::string& type, const std::string& message);

} // namespace milnor
