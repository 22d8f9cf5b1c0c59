#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsym/linalg.hpp"
#include "qsym/presentation.hpp"

namespace qsym {

struct RepError : std::runtime_error {
    explicit RepError(const std::string& m) : std::runtime_error(m) {}
};

// Finite-dimensional *-representation: matrices for the plain generators;
// starred letters evaluate to the conjugate transpose, the unit to Id.
struct MatrixRep {
    int dim = 0;
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
    std::map<std::string, CMatrix> matrices;

    const CMatrix& matrix(const std::string& gen) const {
        auto it = matrices.find(gen);
        if (it == matrices.end()) throw RepError("representation is missing generator '" + gen + "'");
        if (it->second.n != dim || it->second.m != dim)
            throw RepError("dimension mismatch for generator '" + gen + "'");
        return it->second;
    }

    CMatrix eval_word(const GeneratorSet& gens, const Word& w) const {
        CMatrix acc = CMatrix::identity(dim);
        for (Letter l : w) {
            const CMatrix& g = matrix(gens.name(letter_gen(l)));
            acc = letter_star(l) ? acc * g.adjoint() : acc * g;
        }
        return acc;
    }

    CMatrix eval(const GeneratorSet& gens, const NCPoly& p) const {
        CMatrix acc = CMatrix::zeros(dim, dim);
        for (const auto& [w, c] : p.terms())
            acc = acc + eval_word(gens, w).scaled(cplx(c.to_double(), 0.0));
        return acc;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["dim"] = dim;
        j["tolerance"] = tolerance;
        j["seed"] = seed;
        nlohmann::json mats;
        for (const auto& [name, mat] : matrices) {
            nlohmann::json rows = nlohmann::json::array();
            for (int i = 0; i < mat.n; ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (int k = 0; k < mat.m; ++k)
                    row.push_back({{"re", mat(i, k).real()}, {"im", mat(i, k).imag()}});
                rows.push_back(row);
            }
            mats[name] = rows;
        }
        j["matrices"] = mats;
        return j;
    }

    static MatrixRep from_json(const nlohmann::json& j) {
        MatrixRep r;
        r.dim = j.at("dim").get<int>();
        r.tolerance = j.value("tolerance", 1e-9);
        r.seed = j.value("seed", std::uint64_t(0));
        for (auto it = j.at("matrices").begin(); it != j.at("matrices").end(); ++it) {
            const auto& rows = it.value();
            CMatrix m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
            for (int i = 0; i < m.n; ++i)
                for (int k = 0; k < m.m; ++k)
                    m(i, k) = cplx(rows[size_t(i)][size_t(k)].at("re").get<double>(),
                                   rows[size_t(i)][size_t(k)].at("im").get<double>());
            if (m.n != r.dim || m.m != r.dim) throw RepError("matrix dimension mismatch in JSON");
            r.matrices[it.key()] = m;
        }
        return r;
    }
};

struct RepReport {
    double max_residual = 0.0;
    bool pass = true;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, double>> per_relation;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["max_residual"] = max_residual;
        j["pass"] = pass;
        j["seed"] = seed;
        j["per_relation"] = nlohmann::json::array();
        for (const auto& [rel, res] : per_relation)
            j["per_relation"].push_back({{"relation", rel}, {"residual", res}});
        return j;
    }
};

// Evaluates every relation; the residual is the spectral norm.
inline RepReport verify_rep(const Presentation& pres, const MatrixRep& rep) {
    for (int i = 0; i < pres.gens.size(); ++i) rep.matrix(pres.gens.name(i)); // fail fast
    RepReport rpt;
    rpt.seed = rep.seed;
    for (const auto& rel : pres.relations) {
        double res = rep.eval(pres.gens, rel).spectral_norm();
        rpt.per_relation.push_back({rel.str(pres.gens), res});
        rpt.max_residual = std::max(rpt.max_residual, res);
    }
    rpt.pass = rpt.max_residual < rep.tolerance;
    return rpt;
}

struct Witness {
    std::string gen_a;
    std::string gen_b;
    double commutator_norm = 0.0;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const {
        return {{"a", gen_a}, {"b", gen_b}, {"commutator_norm", commutator_norm}, {"seed", seed}};
    }
};

// Samples representations from a provider, keeps only those that satisfy the
// presentation, and looks for a generator pair with a visibly non-zero
// commutator (threshold 0.1 in spectral norm).
template <typename RepProvider>
std::optional<Witness> witness_noncommutativity(const Presentation& pres, RepProvider&& provider,
                                                std::uint64_t seed, int trials) {
    for (int t = 0; t < trials; ++t) {
        std::uint64_t s = seed + std::uint64_t(t);
        MatrixRep rep = provider(s);
        if (!verify_rep(pres, rep).pass) continue;
        for (int i = 0; i < pres.gens.size(); ++i)
            for (int j = i + 1; j < pres.gens.size(); ++j) {
                const CMatrix& A = rep.matrix(pres.gens.name(i));
                const CMatrix& B = rep.matrix(pres.gens.name(j));
                double norm = (A * B - B * A).spectral_norm();
                if (norm > 0.1) return Witness{pres.gens.name(i), pres.gens.name(j), norm, s};
            }
    }
    return std::nullopt;
}

} // namespace qsym
