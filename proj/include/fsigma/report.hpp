#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "fsigma/characters.hpp"
#include "fsigma/explorer.hpp"
#include "fsigma/parse.hpp"
#include "fsigma/products.hpp"
#include "fsigma/words.hpp"

// Report emission.  All serializers are deterministic: field order is
// fixed (ordered_json + insertion order), collections are emitted in the
// deterministic orders their producers guarantee, and every JSON document
// carries schema_version.

namespace fsigma {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json json_rational(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) == 1 && num >= -(BigInt(1) << 53) &&
        num <= (BigInt(1) << 53))
        return static_cast<long long>(num);
    return rational_to_string(r);
}

inline std::string kernel_token(const FinitenessReport& r) {
    if (!r.max_type) return "F_infinity";
    if (*r.max_type == 0) return "not_finitely_generated";
    return "F_" + std::to_string(*r.max_type) + "_not_FP_" + std::to_string(*r.max_type + 1);
}

inline Json element_json(const Element& g) {
    NormalForm nf = normal_form(g.pair);
    Json j;
    j["normal_form"] = to_string(to_word(nf));
    j["breakpoints"] = breakpoints_to_string(g.map);
    j["tree_pair"] = pair_to_string(g.pair);
    j["log_slope_0"] = g.map.log_slope(0);
    j["log_slope_1"] = g.map.log_slope(1);
    auto s = g.map.support();
    j["support"] = s ? Json::array({s->lo.str(), s->hi.str()}) : Json();
    j["schema_version"] = kSchemaVersion;
    return j;
}

inline Json classify_json(const Character& chi, bool with_kernel) {
    Json j;
    j["char"] = Json::array({json_rational(chi.a), json_rational(chi.b)});
    j["verdict"] = to_string(classify_sigma_F(chi));
    if (with_kernel) {
        FinitenessReport k = kernel_finiteness_F(chi);
        j["kernel_type"] = kernel_token(k);
        j["kernel_description"] = describe(k);
        j["discrete"] = k.discrete;
    }
    j["notes"] = Json::array(
        {"homological invariants coincide with the homotopical ones for this group "
         "(recorded result, not computed here)"});
    j["schema_version"] = kSchemaVersion;
    return j;
}

inline Json product_classify_json(const ProductCharacter& chi, bool with_kernel) {
    SkeletonVerdict v = classify_sigma_Fr(chi);
    Json j;
    j["r"] = chi.r();
    Json coords = Json::array();
    for (const auto& c : chi.coords) coords.push_back(json_rational(c));
    j["coords"] = coords;
    if (v.sigma_infinity) {
        j["verdict"] = "SIGMA_INFINITY";
    } else {
        j["verdict"] =
            "IN_SIGMA" + std::to_string(v.k - 1) + "_NOT_SIGMA" + std::to_string(v.k);
        j["k"] = v.k;
    }
    if (with_kernel) {
        FinitenessReport k = kernel_finiteness_Fr(chi);
        j["kernel_type"] = kernel_token(k);
        j["kernel_description"] = describe(k);
    }
    Json notes = Json::array();
    if (!v.sigma_infinity && v.boundary_case)
        notes.push_back("k >= 2r-1: verdict per the uniform skeleton description");
    j["notes"] = notes;
    j["schema_version"] = kSchemaVersion;
    return j;
}

inline Json gr_json(const Subdivision& sub, const GrReport& r) {
    Json j;
    Json cuts = Json::array();
    for (const auto& c : sub.cuts) cuts.push_back(c.str());
    j["cuts"] = cuts;
    j["fixes_cuts"] = r.fixes_cuts;
    if (r.fixes_cuts) {
        j["log2_slope_product"] = r.log2_slope_product;
        j["member"] = r.member;
    } else {
        j["error"] = "element moves a cut point: not in the embedded product copy";
    }
    j["schema_version"] = kSchemaVersion;
    return j;
}

inline Json witness_json(unsigned max_n, const std::optional<unsigned>& depth) {
    Json j;
    j["max_n"] = max_n;
    if (depth)
        j["depth"] = *depth;
    else
        j["depth"] = "exceeds max_n";
    j["schema_version"] = kSchemaVersion;
    return j;
}

inline Json orbit_json(const OrbitReport& r) {
    Json j;
    j["eps"] = r.eps.str();
    j["log_slope_0"] = r.ls0;
    j["log_slope_1"] = r.ls1;
    Json lo = Json::array(), hi = Json::array();
    for (const auto& d : r.orbit_low) lo.push_back(d.str());
    for (const auto& d : r.orbit_high) hi.push_back(d.str());
    j["orbit_from_eps"] = lo;
    j["orbit_from_1_minus_eps"] = hi;
    j["low_strictly_decreasing"] = r.low_strictly_decreasing;
    j["low_bounded_below"] = r.low_bounded_below;
    j["high_strictly_increasing"] = r.high_strictly_increasing;
    j["high_bounded_above"] = r.high_bounded_above;
    j["schema_version"] = kSchemaVersion;
    return j;
}

inline Json relations_json(const RelationReport& r) {
    Json j;
    j["max_index"] = r.max_index;
    j["checked"] = r.checks.size();
    j["all_ok"] = r.all_ok;
    Json failures = Json::array();
    for (const auto& c : r.checks)
        if (!c.ok) failures.push_back(Json::array({c.conjugator, c.inner}));
    j["failures"] = failures;
    j["schema_version"] = kSchemaVersion;
    return j;
}

inline Json ball_summary_json(const BallGraph& ball) {
    Json j;
    j["radius"] = ball.radius;
    j["vertices"] = ball.vertices.size();
    j["edges"] = ball.edges.size();
    j["schema_version"] = kSchemaVersion;
    return j;
}

inline Json component_report_json(const ComponentReport& r) {
    Json j;
    j["n"] = r.n;
    j["N"] = r.N;
    j["char"] = Json::array({json_rational(r.chi.a), json_rational(r.chi.b)});
    j["vertices_in_sublevel"] = r.sublevel_vertex_count;
    j["components_of_Bn_inside_BN"] = r.components_of_inner_ball;
    j["representatives"] = r.representatives;
    j["schema_version"] = kSchemaVersion;
    return j;
}

// header row plus one line per report
inline std::string components_csv(const std::vector<ComponentReport>& reports) {
    std::string out =
        "n,N,char_a,char_b,vertices_in_sublevel,components_of_Bn_inside_BN\n";
    for (const auto& r : reports) {
        out += std::to_string(r.n) + "," + std::to_string(r.N) + "," +
               rational_to_string(r.chi.a) + "," + rational_to_string(r.chi.b) + "," +
               std::to_string(r.sublevel_vertex_count) + "," +
               std::to_string(r.components_of_inner_ball) + "\n";
    }
    return out;
}

// Undirected graph, vertices labeled by normal form ("e" for the
// identity).  When a character is given, sublevel vertices are filled.
inline std::string ball_dot(const BallGraph& ball,
                            const std::optional<Character>& chi = std::nullopt) {
    std::string out = "graph cayley_ball {\n";
    out += "  // radius " + std::to_string(ball.radius) + "\n";
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
        const auto& v = ball.vertices[i];
        std::string label = to_string(to_word(normal_form(v.pair)));
        if (label.empty()) label = "e";
        out += "  v" + std::to_string(i) + " [label=\"" + label + "\"";
        if (chi && char_eval(*chi, v.ls0, v.ls1) >= 0) out += ", style=filled";
        out += "];\n";
    }
    for (const auto& e : ball.edges) {
        out += "  v" + std::to_string(e.a) + " -- v" + std::to_string(e.b) + " [label=\"x" +
               std::to_string(e.generator) + "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace fsigma
