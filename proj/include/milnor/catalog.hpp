#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "milnor/curve.hpp"

namespace milnor {

struct CatalogEntry {
    std::string id;
    std::string summary;
    std::string param;   // "", "m", or "d"
    int default_param = 0;
    int min_param = 0;
};

const std::vector<CatalogEntry>& catalog_entries();

/* The defining polynomial; m/d only where the family is parametric. */
HomogeneousPoly catalog_poly(const std::string& id, std::optional<int> m, std::optional<int> d);

/* Number of irreducible components, where known. */
std::optional<int> catalog_components(const std::string& id, std::optional<int> m,
                                      std::optional<int> d);

/* Validated curve with the component count attached. */
CurveInput catalog_build(const std::string& id, std::optional<int> m, std::optional<int> d,
                         const AnalysisOptions& = {});

/*
 * Machine-checkable expected facts consumed by the acceptance suite and the
 * `catalog facts` command.  Keys (all optional unless noted):
 *   id, param, degree, components          - identification (always present)
 *   classification: {kind, d1?, d2?}       - expected label and exponents
 *   generator_degrees: [..]                - full multiset within default bound
 *   generators_upto: {jmax, degrees}       - partial profile when only a
 *                                            window is known
 *   tjurina                                - global Tjurina number
 *   epsilon: {range: [lo,hi], nonzero: {q: value}}
 *                                          - page-two dims; q in range and
 *                                            not listed means 0
 *   delta1: {factors: [[e,mult]..], display}
 *                                          - certified reduced Alexander
 *                                            polynomial, cyclotomic form
 *   alexander_intervals: {k: [lo,hi]}      - expected non-exact bounds
 *   h2f: {q: dim}                          - closed-mod-exact quotient dims
 */
nlohmann::ordered_json catalog_facts(const std::string& id, std::optional<int> m,
                                     std::optional<int> d);

HomogeneousPoly poly_pow(const HomogeneousPoly& base, int e);

} // namespace milnor
