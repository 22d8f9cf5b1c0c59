#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsym/qsym.hpp"

namespace qsym::cli {

// Exit codes are a stable contract:
//   0 success / Proved / pass, 1 usage or I/O error,
//   2 invalid input for the requested model, 3 Unknown / fail / no witness.
enum ExitCode { kOk = 0, kUsage = 1, kInvalidInput = 2, kUnknown = 3 };

struct Options {
    std::string graph_path;
    std::string model = "qlin";
    std::string relation;
    std::string rep = "builtin:graph-pathspace";
    int degree_cap = 8;
    int rule_cap = 20000;
    int depth = 4;
    int dim = 3;
    int trials = 10;
    int aut_cap = 10;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    bool json = false;
    bool no_cstar = false;
    bool no_antipode = false;
    std::string out_path;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Graph load_graph(const Options& o) { return Graph::parse(read_file(o.graph_path)); }

inline bool is_k2_shape(const Graph& g) {
    return g.edge_count() == 2 && g.vertex_count() == 2 && g.source(0) != g.target(0) &&
           g.source(0) == g.target(1) && g.target(0) == g.source(1);
}

inline Presentation build_model(const std::string& model, const Graph& g, const Options& o) {
    if (model == "graph") return graph_algebra_presentation(g);
    if (model == "banica") return banica(g);
    if (model == "snplus") return s_n_plus(g.vertex_count());
    if (model == "autf") {
        std::vector<Rational> fd;
        for (long long d : f_matrix(g)) fd.push_back(Rational(d));
        return aut_f(QMatrix::diagonal(fd));
    }
    if (model == "qlin") return qlin_presentation(g, o.depth);
    if (model == "free-circles") return free_circles(g.edge_count());
    if (model == "doubling-k2") return doubling(free_circles(2), {1, 0});
    if (model.rfind("json:", 0) == 0)
        return Presentation::from_json(nlohmann::json::parse(read_file(model.substr(5))));
    throw ModelError("unknown model '" + model + "'");
}

inline MatrixRep witness_sample(const std::string& model, const Graph& g, int dim,
                                std::uint64_t seed) {
    if (model == "qlin")
        return is_k2_shape(g) ? k2_doubling_rep(dim, seed)
                              : path_diagonal_rep(g.edge_count(), dim, seed);
    if (model == "doubling-k2") return doubling_block_rep(dim, seed);
    if (model == "free-circles") {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 55);
        MatrixRep rep;
        rep.dim = dim;
        rep.seed = seed;
        for (int i = 1; i <= g.edge_count(); ++i)
            rep.matrices["z_" + std::to_string(i)] = haar_unitary(dim, rng);
        return rep;
    }
    if (model == "banica" || model == "snplus") {
        auto auts = classical_automorphisms(g);
        return banica_classical_rep(g, auts[size_t(seed % auts.size())]);
    }
    if (model == "graph") return path_space_rep(g);
    throw RepError("no representation family registered for model '" + model + "'");
}

inline std::string matrix_line(const std::vector<std::vector<long long>>& m) {
    std::string s;
    for (const auto& row : m) {
        s += "  ";
        for (size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + std::to_string(row[j]);
        s += "\n";
    }
    return s;
}

inline int cmd_analyze(const Options& o, std::string& out) {
    Graph g = load_graph(o);
    auto cls = classify(g);
    auto adj = adjacency_matrix(g);
    auto basis = v2plus_basis(g);
    auto f = f_matrix(g);
    TauFunctional t = tau(g);
    long long aut_order = -1;
    if (g.vertex_count() <= o.aut_cap) aut_order = (long long)classical_automorphisms(g, o.aut_cap).size();

    if (o.json) {
        nlohmann::json j;
        j["graph"] = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
        j["classification"] = {{"has_loop", cls.has_loop},
                               {"has_multi_edge", cls.has_multi_edge},
                               {"acyclic", cls.acyclic}};
        j["sinks"] = nlohmann::json::array();
        for (int v : cls.sinks) j["sinks"].push_back(g.vertex_id(v));
        j["sources_only"] = nlohmann::json::array();
        for (int v : cls.sources_only) j["sources_only"].push_back(g.vertex_id(v));
        j["adjacency"] = adj;
        j["basis"] = {{"pairs", nlohmann::json::array()}, {"sinks", nlohmann::json::array()}};
        for (auto [i, jj] : basis.pair_set)
            j["basis"]["pairs"].push_back({g.edge(i).id, g.edge(jj).id});
        for (int v : basis.sink_list) j["basis"]["sinks"].push_back(g.vertex_id(v));
        j["tau"] = nlohmann::json::array();
        for (auto [i, jj] : basis.pair_set)
            j["tau"].push_back({{"element", "S[" + g.edge(i).id + "]S[" + g.edge(jj).id + "]*"},
                                {"value", t.edge_pair(i, jj).str()}});
        for (int v : basis.sink_list)
            j["tau"].push_back({{"element", "p[" + g.vertex_id(v) + "]"}, {"value", "1"}});
        j["f_matrix_diagonal"] = f;
        if (aut_order >= 0) j["classical_automorphism_order"] = aut_order;
        else j["classical_automorphism_order"] = nullptr;
        out = j.dump(2) + "\n";
        return kOk;
    }
    std::ostringstream s;
    s << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    s << "classification: loops=" << (cls.has_loop ? "yes" : "no")
      << " multi-edges=" << (cls.has_multi_edge ? "yes" : "no")
      << " acyclic=" << (cls.acyclic ? "yes" : "no") << "\n";
    s << "sinks:";
    if (cls.sinks.empty()) s << " (none)";
    for (int v : cls.sinks) s << " " << g.vertex_id(v);
    s << "\nadjacency matrix:\n" << matrix_line(adj);
    s << "degree-two basis: " << basis.pair_set.size() << " edge pairs";
    if (!basis.sink_list.empty()) s << " + " << basis.sink_list.size() << " sink projections";
    s << "\n";
    for (auto [i, j] : basis.pair_set)
        s << "  tau(S[" << g.edge(i).id << "]S[" << g.edge(j).id
          << "]*) = " << t.edge_pair(i, j).str() << "\n";
    for (int v : basis.sink_list) s << "  tau(p[" << g.vertex_id(v) << "]) = 1\n";
    s << "F matrix diagonal:";
    for (long long d : f) s << " " << d;
    s << "\n";
    if (aut_order >= 0) s << "classical automorphisms: order " << aut_order << "\n";
    else s << "classical automorphisms: skipped (vertex count above cap)\n";
    out = s.str();
    return kOk;
}

inline int cmd_present(const Options& o, std::string& out) {
    Graph g = load_graph(o);
    Presentation p = build_model(o.model, g, o);
    if (o.json) {
        out = p.to_json().dump(2) + "\n";
        return kOk;
    }
    std::ostringstream s;
    s << "presentation: " << p.name << "\n";
    s << "generators (" << p.gens.size() << "):";
    for (int i = 0; i < p.gens.size(); ++i) s << " " << p.gens.name(i);
    s << "\nrelations (" << p.relations.size() << "):\n";
    for (const auto& r : p.relations) s << "  " << r.str(p.gens) << " = 0\n";
    if (!p.coproduct.empty()) s << "coproduct: " << p.coproduct << "\n";
    out = s.str();
    return kOk;
}

inline int cmd_derive(const Options& o, std::string& out) {
    Graph g = load_graph(o);
    nlohmann::json j = derive_report(g, o.depth);
    if (o.json) {
        out = j.dump(2) + "\n";
        return kOk;
    }
    std::ostringstream s;
    s << "derived constraints for the generic linear tau-preserving coaction\n";
    s << "F matrix diagonal:";
    for (long long d : f_matrix(g)) s << " " << d;
    s << "\nindependence_assumed: " << (j["flags"]["independence_assumed"].get<bool>() ? "yes" : "no")
      << "\n";
    for (const auto& c : j["constraints"])
        s << "  [" << c["source"].get<std::string>() << "] " << c["relation"].get<std::string>()
          << " = 0   (left leg " << c["left_leg"].get<std::string>() << ")\n";
    out = s.str();
    return kOk;
}

inline int cmd_prove(const Options& o, std::string& out) {
    Graph g = load_graph(o);
    Presentation p = build_model(o.model, g, o);
    NCPoly goal = parse_expr(o.relation, p.gens);
    ProofOptions opts;
    opts.caps = Caps{o.degree_cap, o.rule_cap};
    opts.cstar_inference = !o.no_cstar;
    opts.antipode = !o.no_antipode;
    ProofEngine eng(p, opts);
    ProofResult res = eng.prove(goal);
    if (o.json) {
        nlohmann::json j;
        j["relation"] = o.relation;
        j["status"] = res.status();
        j["cstar_used"] = res.cstar_used;
        j["antipode_used"] = res.antipode_used;
        j["certificate"] = nlohmann::json::array();
        for (const auto& st : res.certificate)
            j["certificate"].push_back({{"kind", st.kind}, {"detail", st.detail}});
        out = j.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << res.status() << ": " << o.relation << " = 0\n";
        if (res.proved) {
            size_t steps = 0;
            for (const auto& st : res.certificate)
                if (st.kind != "reduce") ++steps;
            s << "inference steps: " << steps << (res.antipode_used ? " (antipode used)" : "")
              << "\n";
            for (const auto& st : res.certificate)
                if (st.kind != "reduce") s << "  [" << st.kind << "] " << st.detail << "\n";
        }
        out = s.str();
    }
    return res.proved ? kOk : kUnknown;
}

inline int cmd_repcheck(const Options& o, std::string& out) {
    Graph g = load_graph(o);
    Presentation p = build_model(o.model, g, o);
    MatrixRep rep;
    if (o.rep.rfind("builtin:", 0) == 0) {
        rep = builtin_rep(o.rep.substr(8), g, o.dim, o.seed);
    } else {
        rep = MatrixRep::from_json(nlohmann::json::parse(read_file(o.rep)));
    }
    rep.tolerance = o.tol;
    RepReport rpt = verify_rep(p, rep);
    if (o.json) {
        out = rpt.to_json().dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << (rpt.pass ? "pass" : "fail") << ": max residual " << rpt.max_residual << " over "
          << rpt.per_relation.size() << " relations (dim " << rep.dim << ", tol " << rep.tolerance
          << ")\n";
        if (!rpt.pass)
            for (const auto& [rel, res] : rpt.per_relation)
                if (res >= rep.tolerance) s << "  residual " << res << ": " << rel << "\n";
        out = s.str();
    }
    return rpt.pass ? kOk : kUnknown;
}

inline int cmd_witness(const Options& o, std::string& out) {
    Graph g = load_graph(o);
    Presentation p = build_model(o.model, g, o);
    auto provider = [&](std::uint64_t s) { return witness_sample(o.model, g, o.dim, s); };
    auto w = witness_noncommutativity(p, provider, o.seed, o.trials);
    if (o.json) {
        nlohmann::json j;
        j["found"] = bool(w);
        if (w) j["witness"] = w->to_json();
        out = j.dump(2) + "\n";
    } else if (w) {
        std::ostringstream s;
        s << "noncommutativity witness: ||[" << w->gen_a << ", " << w->gen_b
          << "]|| = " << w->commutator_norm << " (seed " << w->seed << ", dim " << o.dim << ")\n";
        out = s.str();
    } else {
        out = "no witness found in " + std::to_string(o.trials) + " trials\n";
    }
    return w ? kOk : kUnknown;
}

inline int cmd_auts(const Options& o, std::string& out) {
    Graph g = load_graph(o);
    auto auts = classical_automorphisms(g, o.aut_cap);
    if (o.json) {
        nlohmann::json j;
        j["order"] = auts.size();
        j["permutations"] = nlohmann::json::array();
        for (const auto& sigma : auts) {
            nlohmann::json perm;
            for (int v = 0; v < g.vertex_count(); ++v)
                perm[g.vertex_id(v)] = g.vertex_id(sigma[size_t(v)]);
            j["permutations"].push_back(perm);
        }
        out = j.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << "classical automorphism group order: " << auts.size() << "\n";
        for (const auto& sigma : auts) {
            s << " ";
            for (int v = 0; v < g.vertex_count(); ++v)
                s << " " << g.vertex_id(v) << "->" << g.vertex_id(sigma[size_t(v)]);
            s << "\n";
        }
        out = s.str();
    }
    return kOk;
}

inline int run_cli(const std::vector<std::string>& args, std::string& out, std::string& err) {
    Options o;
    CLI::App app{"qsym: computer algebra for quantum symmetries of graph C*-algebras"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* c, bool graph_positional = true) {
        if (graph_positional)
            c->add_option("graph", o.graph_path, "graph file")->required();
        c->add_flag("--json", o.json, "machine-readable output");
        c->add_option("--out", o.out_path, "write output to a file");
        c->add_option("--degree-cap", o.degree_cap, "completion degree cap")
            ->check(CLI::PositiveNumber);
        c->add_option("--rule-cap", o.rule_cap, "completion rule cap")->check(CLI::PositiveNumber);
        c->add_option("--depth", o.depth, "left-leg expansion depth")->check(CLI::PositiveNumber);
        c->add_option("--seed", o.seed, "random seed");
        c->add_option("--dim", o.dim, "representation dimension")->check(CLI::PositiveNumber);
        c->add_option("--tol", o.tol, "numerical tolerance")->check(CLI::PositiveNumber);
    };
    const std::vector<std::string> models{"graph", "banica",       "snplus",     "autf",
                                          "qlin",  "free-circles", "doubling-k2"};
    auto check_model = [models](const std::string& m) -> std::string {
        if (m.rfind("json:", 0) == 0) return std::string();
        for (const auto& k : models)
            if (k == m) return std::string();
        return "model must be one of {graph, banica, snplus, autf, qlin, free-circles, "
               "doubling-k2} or json:<file>";
    };

    CLI::App* analyze = app.add_subcommand("analyze", "structural report for a graph");
    add_common(analyze);
    analyze->add_option("--aut-cap", o.aut_cap, "vertex cap for brute-force automorphisms");

    CLI::App* present = app.add_subcommand("present", "emit a presentation");
    add_common(present);
    present->add_option("--model", o.model, "presentation model")->check(check_model);

    CLI::App* derive = app.add_subcommand("derive", "derive coaction constraints");
    add_common(derive);

    CLI::App* prove = app.add_subcommand("prove", "prove a relation equals zero");
    add_common(prove);
    prove->add_option("--model", o.model, "presentation model")->check(check_model);
    prove->add_option("relation", o.relation, "relation expression")->required();
    prove->add_flag("--no-cstar", o.no_cstar, "disable C*-sound inference");
    prove->add_flag("--no-antipode", o.no_antipode, "disable the antipode rule");

    CLI::App* repcheck = app.add_subcommand("repcheck", "verify a matrix representation");
    add_common(repcheck);
    repcheck->add_option("--model", o.model, "presentation model")->check(check_model);
    repcheck->add_option("--rep", o.rep, "builtin:<family> or a rep JSON file");

    CLI::App* witness = app.add_subcommand("witness", "search for a noncommutativity witness");
    add_common(witness);
    witness->add_option("--model", o.model, "presentation model")->check(check_model);
    witness->add_option("--trials", o.trials, "sampling attempts")->check(CLI::PositiveNumber);

    CLI::App* auts = app.add_subcommand("auts", "enumerate classical graph automorphisms");
    add_common(auts);
    auts->add_option("--aut-cap", o.aut_cap, "vertex cap for brute-force enumeration");

    std::vector<const char*> argv;
    argv.push_back("qsym");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out = app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err = std::string(e.what()) + "\n";
        return kUsage;
    }

    int code = kUsage;
    try {
        if (analyze->parsed()) code = cmd_analyze(o, out);
        else if (present->parsed()) code = cmd_present(o, out);
        else if (derive->parsed()) code = cmd_derive(o, out);
        else if (prove->parsed()) code = cmd_prove(o, out);
        else if (repcheck->parsed()) code = cmd_repcheck(o, out);
        else if (witness->parsed()) code = cmd_witness(o, out);
        else if (auts->parsed()) code = cmd_auts(o, out);
    } catch (const std::ios_base::failure& e) {
        err = std::string("i/o error: ") + e.what() + "\n";
        return kUsage;
    } catch (const GraphError& e) {
        err = std::string("graph error: ") + e.what() + "\n";
        return kInvalidInput;
    } catch (const ModelError& e) {
        err = std::string("model error: ") + e.what() + "\n";
        return kInvalidInput;
    } catch (const ExprError& e) {
        err = std::string(e.what()) + "\n";
        return kInvalidInput;
    } catch (const RepError& e) {
        err = std::string("representation error: ") + e.what() + "\n";
        return kInvalidInput;
    } catch (const InsufficientDepth& e) {
        err = std::string(e.what()) + "\n";
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err = std::string(e.what()) + "\n";
        return kInvalidInput;
    } catch (const nlohmann::json::exception& e) {
        err = std::string("json error: ") + e.what() + "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        err = std::string("error: ") + e.what() + "\n";
        return kUsage;
    }

    if (!o.out_path.empty() && !out.empty()) {
        std::ofstream f(o.out_path);
        if (!f) {
            err = "cannot write '" + o.out_path + "'\n";
            return kUsage;
        }
        f << out;
        out.clear();
    }
    return code;
}

} // namespace qsym::cli
