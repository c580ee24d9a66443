#pragma once

// Text, JSON and CSV renderings. JSON objects keep insertion order so the
// output is byte-stable; node indices are 1-based.

#include <string>
#include <vector>

#include <json.hpp>

#include "weylsheaf/cuspidal.hpp"
#include "weylsheaf/parametrization.hpp"
#include "weylsheaf/relative_weyl.hpp"
#include "weylsheaf/root_system.hpp"

namespace weylsheaf {

using Json = nlohmann::ordered_json;

inline Json node_list(SubsetJ J) {
    Json a = Json::array();
    for (int i : J.indices()) a.push_back(i + 1);
    return a;
}

inline std::string node_string(SubsetJ J) {
    std::string out = "{";
    bool first = true;
    for (int i : J.indices()) {
        if (!first) out += ',';
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

inline Json to_json(const ParameterPart& p) {
    return Json{{"tag", p.tag},
                {"J", node_list(p.J)},
                {"levi", p.levi.name()},
                {"zeta", to_string(p.zeta)},
                {"relative", p.relative.name()},
                {"epsilon", to_string(p.epsilon)}};
}

inline Json to_json(const SheafParameter& p) {
    Json j{{"ambient", p.ambient.name()},
           {"J", node_list(p.J())},
           {"levi", p.levi().name()},
           {"zeta", p.zeta_string()},
           {"relative", p.relative().name()},
           {"epsilon", p.epsilon_string()}};
    if (p.parts.size() > 1) {
        Json comps = Json::array();
        for (const auto& part : p.parts) comps.push_back(to_json(part));
        j["components"] = std::move(comps);
    }
    return j;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_header() { return "ambient,J,levi,zeta,relative,epsilon"; }

inline std::string csv_row(const SheafParameter& p) {
    std::string J;
    for (int i : p.J().indices()) J += (J.empty() ? "" : " ") + std::to_string(i + 1);
    return csv_field(p.ambient.name()) + "," + csv_field(J) + "," + csv_field(p.levi().name()) + "," +
           csv_field(p.zeta_string()) + "," + csv_field(p.relative().name()) + "," + csv_field(p.epsilon_string());
}

inline std::string text_row(const SheafParameter& p) {
    return "J=" + node_string(p.J()) + " levi=" + p.levi().name() + " zeta=" + p.zeta_string() +
           " relative=" + p.relative().name() + " epsilon=" + p.epsilon_string();
}

inline Json to_json(const SeriesReport& r) {
    Json series = Json::array();
    for (const auto& s : r.series)
        series.push_back(Json{{"J", node_list(s.J)},
                              {"levi", s.levi.name()},
                              {"zeta", s.zeta_string()},
                              {"relative", s.relative.name()},
                              {"count", s.count}});
    return Json{{"ambient", r.ambient.name()}, {"total", r.total}, {"series", std::move(series)}};
}

inline Json matrix_json(const IntMatrix& m) {
    Json a = Json::array();
    for (const auto& row : m) a.push_back(row);
    return a;
}

inline Json to_json(const RelativeWeylGroup& g) {
    Json gens = Json::array();
    for (std::size_t k = 0; k < g.complement.size(); ++k) {
        Json word = Json::array();
        for (int i : g.words[k]) word.push_back(i + 1);
        const Rational& n = g.generator_norms[k];
        gens.push_back(Json{{"h", g.complement[k] + 1},
                            {"word", std::move(word)},
                            {"length", g.generators[k].length()},
                            {"norm", n.denominator() == 1 ? std::to_string(n.numerator())
                                                          : std::to_string(n.numerator()) + "/" + std::to_string(n.denominator())}});
    }
    return Json{{"ambient", g.ambient.name()},
                {"J", node_list(g.J)},
                {"generators", std::move(gens)},
                {"coxeter_matrix", matrix_json(g.coxeter_matrix)},
                {"relative", g.identified_type.name()}};
}

} // namespace weylsheaf
