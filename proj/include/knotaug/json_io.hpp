#ifndef KNOTAUG_JSON_IO_HPP
#define KNOTAUG_JSON_IO_HPP

#include <json.hpp>

#include "knotaug/augvar.hpp"
#include "knotaug/comm_poly.hpp"
#include "knotaug/families.hpp"
#include "knotaug/h0.hpp"
#include "knotaug/laurent.hpp"
#include "knotaug/obstruct.hpp"
#include "knotaug/uni_poly.hpp"

namespace knotaug {

using json = nlohmann::json;

inline json to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exponents", {e.l, e.m, e.u}}, {"coefficient", to_string(c)}});
    return terms;
}

inline json to_json(const CommPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back({{"exponents", m}, {"coefficient", c.str()}});
    return {{"variables", p.ring()->names()}, {"terms", terms}, {"text", p.str()}};
}

inline json to_json(const RationalUniPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
    return {{"coefficients", coeffs}, {"text", p.str()}};
}

inline json to_json(const VarietyPointSet& V) {
    json pts = json::array();
    for (const auto& [x, y, Z] : V.points) pts.push_back({x, y, Z});
    return {{"p", V.p}, {"points", pts}, {"count", V.points.size()}};
}

inline json to_json(const ContainmentReport& r) {
    json viol = json::array();
    for (const auto& [x, y, Z] : r.violations) viol.push_back({x, y, Z});
    return {{"checked", r.checked}, {"violations", viol}, {"pass", r.pass()}};
}

inline json to_json(const Certificate& c) {
    json cands = json::array();
    for (const auto& cand : c.candidates)
        cands.push_back({{"value", to_string(cand.value)},
                         {"poly_value", to_string(cand.poly_value)},
                         {"cleared_value", to_string(cand.cleared_value)}});
    json cleared = json::array();
    for (const auto& v : c.cleared) cleared.push_back(to_string(v));
    return {{"family", c.family},
            {"m", c.m},
            {"y0", to_string(c.y0)},
            {"Z0", to_string(c.Z0)},
            {"specialization", to_json(c.specialization)},
            {"cleared", cleared},
            {"candidates", cands},
            {"power_transcript", c.power_transcript},
            {"reverified", c.reverify()}};
}

inline json to_json(const FigureEightDerivation& d) {
    return {{"reference", to_json(d.reference)},
            {"derived", to_json(d.derived)},
            {"matches", d.matches},
            {"difference", to_json(d.difference)},
            {"mbar_derived", to_json(d.mbar_derived)},
            {"mbar_reference", to_json(d.mbar_reference)},
            {"mbar_matches_reference", d.mbar_matches_reference},
            {"substitutions_match_reference", d.substitutions_match_reference},
            {"derived_u1_root", d.derived_u1_root},
            {"derived_u1_cofactor", to_json(d.derived_u1_cofactor)},
            {"reference_u1_factorization", d.reference_u1_factorization}};
}

inline json matrix_text(const FreeMatrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e.str());
        rows.push_back(r);
    }
    return rows;
}

inline json to_json(const H0Presentation& p) {
    json gens = json::array();
    for (const auto& g : p.generators) gens.push_back(g.str());
    return {{"strands", p.braid.strands},
            {"word", p.braid.letters},
            {"writhe", p.braid.writhe()},
            {"permutation", p.braid.permutation()},
            {"matrices",
             {{"A", matrix_text(p.matrices.A)},
              {"Ahat", matrix_text(p.matrices.Ahat)},
              {"Lambda11", p.matrices.lambda11.str()},
              {"PhiL", matrix_text(p.phiL)},
              {"first", matrix_text(p.gens_first)},
              {"second", matrix_text(p.gens_second)}}},
            {"generators", gens},
            {"variables", p.ring->names()}};
}

} // namespace knotaug

#endif
