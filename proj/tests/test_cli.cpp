#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cli_app.hpp"

using namespace qsym;
using qsym::cli::run_cli;

static std::string graphs(const std::string& name) {
    return std::string(QSYM_GRAPHS_DIR) + "/" + name;
}

static int run(const std::vector<std::string>& args, std::string* out = nullptr,
               std::string* err = nullptr) {
    std::string o, e;
    int code = run_cli(args, o, e);
    if (out) *out = o;
    if (err) *err = e;
    return code;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/qsym_test_" + name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

TEST_CASE("analyze") {
    std::string out;
    CHECK(run({"analyze", graphs("k2.graph")}, &out) == 0);
    CHECK(out.find("classical automorphisms: order 2") != std::string::npos);
    CHECK(out.find("F matrix diagonal: 1 1") != std::string::npos);

    CHECK(run({"analyze", graphs("l3.graph")}, &out) == 0);
    CHECK(out.find("F matrix diagonal: 3 3 3") != std::string::npos);

    CHECK(run({"analyze", graphs("p2.graph"), "--json"}, &out) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["basis"]["pairs"].size() == 2);
    CHECK(j["basis"]["sinks"] == nlohmann::json::array({"v2"}));
    CHECK(j["f_matrix_diagonal"] == nlohmann::json::array({1, 1}));
    CHECK(j["classical_automorphism_order"] == 1);
}

TEST_CASE("exit codes: usage, I/O and invalid input") {
    std::string out, err;
    CHECK(run({"analyze", "/nonexistent/file.graph"}, &out, &err) == 1);
    CHECK(run({"bogus-command"}, &out, &err) == 1);
    CHECK(run({"present", graphs("k2.graph"), "--model", "bogus"}, &out, &err) == 1);
    TempFile bad("bad.graph", "edge e1 a\n");
    CHECK(run({"analyze", bad.path}, &out, &err) == 2);
    TempFile isolated("iso.graph", "vertex c\nedge e1 a b\n");
    CHECK(run({"analyze", isolated.path}, &out, &err) == 2);
    CHECK(err.find("not connected") != std::string::npos);
    // banica on a loop graph: hypothesis violation
    CHECK(run({"present", graphs("l1.graph"), "--model", "banica"}, &out, &err) == 2);
    // malformed relation expression
    CHECK(run({"prove", graphs("k2.graph"), "--model", "qlin", "q_9_9"}, &out, &err) == 2);
}

TEST_CASE("present") {
    std::string out;
    CHECK(run({"present", graphs("k2.graph"), "--model", "qlin", "--json"}, &out) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["generators"].size() == 4);
    CHECK(j["layout"]["prefix"] == "q");
    // the emitted JSON loads back as a presentation and proves the same facts
    Presentation p = Presentation::from_json(j);
    ProofOptions opts;
    opts.caps = Caps{6, 20000};
    ProofEngine eng(p, opts);
    CHECK(eng.prove(parse_expr("q_1_1 q_2_1", p.gens)).proved);

    CHECK(run({"present", graphs("k2.graph"), "--model", "banica", "--json"}, &out) == 0);
    CHECK(nlohmann::json::parse(out)["generators"].size() == 4);
    CHECK(run({"present", graphs("p2.graph"), "--model", "snplus"}, &out) == 0);
    CHECK(run({"present", graphs("k2.graph"), "--model", "doubling-k2", "--json"}, &out) == 0);
    CHECK(nlohmann::json::parse(out)["generators"].size() == 6);
}

TEST_CASE("present accepts a presentation JSON as model input") {
    std::string out;
    CHECK(run({"present", graphs("k2.graph"), "--model", "free-circles", "--json"}, &out) == 0);
    TempFile pres("pres.json", out);
    std::string out2;
    CHECK(run({"present", graphs("k2.graph"), "--model", "json:" + pres.path, "--json"}, &out2) == 0);
    CHECK(nlohmann::json::parse(out) == nlohmann::json::parse(out2));
}

TEST_CASE("prove") {
    std::string out;
    CHECK(run({"prove", graphs("p3.graph"), "--model", "qlin", "q_1_2"}, &out) == 0);
    CHECK(out.find("Proved") != std::string::npos);
    CHECK(run({"prove", graphs("k2.graph"), "--model", "qlin",
               "q_1_1* q_1_1 - q_1_1 q_1_1*"}, &out) == 0);
    CHECK(run({"prove", graphs("k2.graph"), "--model", "qlin", "q_1_1 - q_2_2"}, &out) == 3);
    CHECK(out.find("Unknown") != std::string::npos);
    CHECK(run({"prove", graphs("k2.graph"), "--model", "qlin", "--json", "q_1_1 q_2_1"}, &out) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["status"] == "Proved");
}

TEST_CASE("derive") {
    std::string out;
    CHECK(run({"derive", graphs("p2.graph"), "--json"}, &out) == 0);
    auto j = nlohmann::json::parse(out);
    bool q12 = false, q21 = false;
    for (const auto& c : j["constraints"]) {
        if (c["relation"] == "q_1_2") q12 = true;
        if (c["relation"] == "q_2_1") q21 = true;
    }
    CHECK(q12);
    CHECK(q21);
    CHECK(j["flags"]["independence_assumed"] == false);
}

TEST_CASE("repcheck") {
    std::string out;
    CHECK(run({"repcheck", graphs("k2.graph"), "--model", "qlin", "--rep", "builtin:k2-doubling",
               "--dim", "3", "--seed", "1"}, &out) == 0);
    CHECK(run({"repcheck", graphs("p2.graph"), "--model", "graph", "--rep",
               "builtin:graph-pathspace"}, &out) == 0);
    CHECK(run({"repcheck", graphs("k2.graph"), "--model", "banica", "--rep",
               "builtin:banica-classical", "--seed", "1", "--json"}, &out) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["pass"] == true);
    // rep JSON file round-trip through the CLI
    MatrixRep rep = k2_doubling_rep(2, 4);
    TempFile repfile("rep.json", rep.to_json().dump());
    CHECK(run({"repcheck", graphs("k2.graph"), "--model", "qlin", "--rep", repfile.path}, &out) == 0);
    // a deliberately wrong rep fails with exit 3
    MatrixRep bad = rep;
    bad.matrices["q_1_1"](0, 0) += 0.25;
    TempFile badfile("badrep.json", bad.to_json().dump());
    CHECK(run({"repcheck", graphs("k2.graph"), "--model", "qlin", "--rep", badfile.path}, &out) == 3);
}

TEST_CASE("witness") {
    std::string out;
    CHECK(run({"witness", graphs("k2.graph"), "--model", "qlin", "--dim", "2", "--seed", "1",
               "--json"}, &out) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["found"] == true);
    CHECK(j["witness"]["commutator_norm"].get<double>() > 0.1);
    CHECK(run({"witness", graphs("p1.graph"), "--model", "qlin", "--dim", "2"}, &out) == 3);
}

TEST_CASE("auts") {
    std::string out, err;
    CHECK(run({"auts", graphs("c4.graph"), "--json"}, &out) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["order"] == 4);
    CHECK(run({"auts", graphs("p3.graph")}, &out) == 0);
    CHECK(out.find("order: 1") != std::string::npos);
    // brute force refuses oversized inputs
    std::string big;
    for (int i = 0; i < 11; ++i)
        big += "edge e" + std::to_string(i) + " v" + std::to_string(i) + " v" +
               std::to_string(i + 1) + "\n";
    TempFile bigfile("big.graph", big);
    CHECK(run({"auts", bigfile.path}, &out, &err) == 2);
    CHECK(err.find("too large") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
    std::string out, err;
    std::string path = "/tmp/qsym_test_out.json";
    CHECK(run({"analyze", graphs("k2.graph"), "--json", "--out", path}, &out, &err) == 0);
    CHECK(out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    nlohmann::json j;
    f >> j;
    CHECK(j["graph"]["edges"] == 2);
    std::remove(path.c_str());
}
