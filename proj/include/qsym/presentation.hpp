#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsym/exprparse.hpp"
#include "qsym/ncpoly.hpp"

namespace qsym {

// A generators-and-relations presentation of a unital *-algebra, with the
// compact-quantum-group metadata (matrix layout, coproduct formula) carried
// as annotations only.
struct Presentation {
    std::string name;
    GeneratorSet gens;
    std::vector<NCPoly> relations;
    std::string coproduct;  // textual formula, never computed with
    std::string provenance;

    void add_relation(const NCPoly& r) {
        if (!r.zero()) relations.push_back(r.monic());
    }

    void dedupe() {
        std::set<NCPoly, NCPolyLess> seen;
        std::vector<NCPoly> out;
        for (const auto& r : relations)
            if (seen.insert(r).second) out.push_back(r);
        relations = std::move(out);
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["name"] = name;
        j["generators"] = nlohmann::json::array();
        for (int i = 0; i < gens.size(); ++i) {
            std::string star = gens.self_adjoint(i) ? gens.name(i) : gens.name(i) + "*";
            j["generators"].push_back({{"name", gens.name(i)}, {"star", star}});
        }
        if (gens.layout) {
            j["layout"] = {{"rows", gens.layout->rows},
                           {"cols", gens.layout->cols},
                           {"prefix", gens.layout->prefix}};
        } else {
            j["layout"] = nullptr;
        }
        j["relations"] = nlohmann::json::array();
        for (const auto& r : relations) j["relations"].push_back(r.str(gens));
        j["coproduct"] = coproduct.empty() ? nlohmann::json() : nlohmann::json(coproduct);
        j["provenance"] = provenance;
        return j;
    }

    static Presentation from_json(const nlohmann::json& j) {
        Presentation p;
        p.name = j.value("name", "");
        for (const auto& g : j.at("generators")) {
            std::string n = g.at("name").get<std::string>();
            std::string star = g.value("star", n + "*");
            p.gens.add(n, star == n);
        }
        if (j.contains("layout") && !j.at("layout").is_null()) {
            MatrixLayout lay;
            lay.prefix = j.at("layout").at("prefix").get<std::string>();
            lay.rows = j.at("layout").at("rows").get<int>();
            lay.cols = j.at("layout").at("cols").get<int>();
            int first = p.gens.find(lay.prefix + "_1_1");
            if (first < 0) throw std::invalid_argument("layout prefix does not match generators");
            lay.first = first;
            p.gens.layout = lay;
        }
        for (const auto& r : j.at("relations"))
            p.add_relation(parse_expr(r.get<std::string>(), p.gens));
        if (j.contains("coproduct") && !j.at("coproduct").is_null())
            p.coproduct = j.at("coproduct").get<std::string>();
        p.provenance = j.value("provenance", "");
        return p;
    }
};

// Adds an n x m matrix of generators named <prefix>_i_j (1-based) and tags
// the generator set with the layout.
inline void add_matrix_generators(GeneratorSet& gens, const std::string& prefix, int rows,
                                  int cols, bool self_adjoint = false) {
    MatrixLayout lay;
    lay.prefix = prefix;
    lay.rows = rows;
    lay.cols = cols;
    lay.first = gens.size();
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            gens.add(prefix + "_" + std::to_string(i) + "_" + std::to_string(j), self_adjoint);
    gens.layout = lay;
}

} // namespace qsym
