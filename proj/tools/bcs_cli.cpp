#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bcs/bipartite_solver.hpp"
#include "bcs/diam2_solver.hpp"
#include "bcs/dispatch.hpp"
#include "bcs/generate.hpp"
#include "bcs/io.hpp"
#include "bcs/oracle.hpp"
#include "bcs/reductions.hpp"
#include "bcs/split_solver.hpp"
#include "bcs/tree_solver.hpp"

// Exit codes: 0 ok, 1 input/usage error, 2 unsupported instance,
// 3 not_balanced (verify), 4 not_connected (verify).

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Empty path means stdout.
void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

struct SolveArgs {
    std::string method = "auto";
    std::string in;
    std::string out;
    int max_n = bcs::OracleConfig{}.max_n;
    int threads = 1;
};

int cmd_solve(const SolveArgs& a) {
    bcs::ColoredGraph g = bcs::parse_graph(read_file(a.in));
    bcs::OracleConfig cfg;
    cfg.max_n = a.max_n;

    bcs::Solution sol;
    std::string tag = a.method;
    if (a.method == "auto") {
        bcs::AutoResult res = bcs::solve_auto(g, cfg);
        if (!res.supported()) {
            const bcs::ClassReport& r = *res.report;
            std::cerr << "unsupported: n=" << g.vertex_count() << " exceeds the oracle cap and "
                      << "the instance is in no solvable class (connected=" << r.connected
                      << " tree=" << r.tree << " split=" << r.split
                      << " proper_bipartite=" << r.proper_bipartite
                      << " diameter_le_2=" << r.diameter_le_2 << ")\n";
            return 2;
        }
        sol = *res.solution;
        tag = res.method;
    } else if (a.method == "oracle") {
        sol = bcs::oracle_bcs(g, cfg);
    } else if (a.method == "oracle-path") {
        sol = bcs::oracle_balanced_path(g, cfg);
    } else if (a.method == "tree") {
        sol = bcs::solve_tree(g, a.threads);
    } else if (a.method == "split") {
        sol = bcs::solve_split(g);
    } else if (a.method == "bipartite") {
        sol = bcs::solve_bipartite_proper(g);
    } else {
        sol = bcs::solve_diam2(g);
    }

    bcs::Verdict v = bcs::verify_solution(g, sol);
    if (v != bcs::Verdict::ok) {
        std::cerr << "internal: solver output failed verification (" << bcs::verdict_name(v)
                  << ")\n";
        return 1;
    }
    std::cerr << "method: " << tag << "  size: " << sol.size() << "\n";
    write_output(a.out, bcs::serialize_solution(sol));
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& solution_path) {
    bcs::ColoredGraph g = bcs::parse_graph(read_file(graph_path));
    std::vector<int> vertices = bcs::parse_solution(read_file(solution_path));
    bcs::Verdict v = bcs::verify_solution(g, vertices);
    std::cout << bcs::verdict_name(v) << "\n";
    switch (v) {
        case bcs::Verdict::ok: return 0;
        case bcs::Verdict::not_subset: return 1;
        case bcs::Verdict::not_balanced: return 3;
        case bcs::Verdict::not_connected: return 4;
    }
    return 1;
}

int cmd_detect(const std::string& in_path) {
    bcs::ColoredGraph g = bcs::parse_graph(read_file(in_path));
    bcs::ClassReport r = bcs::classify(g);
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "n: " << g.vertex_count() << "\nm: " << g.edge_count()
              << "\nred: " << g.red_count() << "\nblue: " << g.blue_count()
              << "\nconnected: " << yn(r.connected) << "\ntree: " << yn(r.tree)
              << "\nsplit: " << yn(r.split);
    if (r.split) std::cout << " (|K|=" << r.split_K.size() << " |S|=" << r.split_S.size() << ")";
    std::cout << "\nproper_bipartite: " << yn(r.proper_bipartite);
    if (r.monochromatic_edge) {
        std::cout << " (edge " << r.monochromatic_edge->u << "-" << r.monochromatic_edge->v
                  << " is monochromatic)";
    }
    std::cout << "\ndiameter_le_2: " << yn(r.diameter_le_2) << "\n";
    return 0;
}

struct GenArgs {
    std::string cls;
    std::string out;
    int n = 0;
    double red_frac = 0.5;
    std::uint64_t seed = 0;
};

int cmd_gen(const GenArgs& a) {
    if (a.n < 1) {
        std::cerr << "error: --n must be at least 1\n";
        return 1;
    }
    bcs::Rng rng(a.seed);
    bcs::ColoredGraph g;
    if (a.cls == "tree") {
        g = bcs::gen_tree(a.n, a.red_frac, rng);
    } else if (a.cls == "split") {
        g = bcs::gen_split(a.n, a.red_frac, rng);
    } else if (a.cls == "bipartite") {
        g = bcs::gen_bipartite_proper(a.n, a.red_frac, rng);
    } else if (a.cls == "diam2") {
        g = bcs::gen_diam2(a.n, a.red_frac, rng);
    } else {
        g = bcs::gen_random(a.n, a.red_frac, rng);
    }
    write_output(a.out, bcs::serialize_graph(g));
    return 0;
}

struct ReduceArgs {
    std::string from;
    std::string in;
    std::string out;
    std::string map;
};

int cmd_reduce(const ReduceArgs& a) {
    const std::string text = read_file(a.in);
    bcs::ReductionOutput out;
    if (a.from == "ec3set") {
        out = bcs::reduce_ec3set_bcs(bcs::parse_ec3set(text));
    } else if (a.from == "ec3set-chordal") {
        out = bcs::reduce_ec3set_bcs_chordal(bcs::parse_ec3set(text));
    } else if (a.from == "ec3set-exist") {
        out = bcs::reduce_ec3set_existence(bcs::parse_ec3set(text));
    } else if (a.from == "stpg") {
        out = bcs::reduce_stpg_bcs(bcs::parse_steiner(text));
    } else {
        out = bcs::reduce_hampath_bcp(bcs::parse_uncolored_graph(text));
    }
    write_output(a.out, bcs::serialize_graph(out.graph));
    write_output(a.map, bcs::serialize_reduction_map(out));
    std::cerr << "target_size: " << out.target_size << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Balanced connected subgraph toolkit"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "Solve an instance and write the solution");
    solve->add_option("--method", solve_args.method, "Solver to use")
        ->check(CLI::IsMember(
            {"auto", "oracle", "oracle-path", "tree", "split", "bipartite", "diam2"}));
    solve->add_option("--in", solve_args.in, "Input graph file")->required();
    solve->add_option("--out", solve_args.out, "Output solution file (default stdout)");
    solve->add_option("--max-n", solve_args.max_n, "Oracle size cap");
    solve->add_option("--threads", solve_args.threads, "Worker threads for the tree solver");

    std::string verify_graph, verify_solution;
    CLI::App* verify = app.add_subcommand("verify", "Check a solution file against a graph");
    verify->add_option("--graph", verify_graph, "Graph file")->required();
    verify->add_option("--solution", verify_solution, "Solution file")->required();

    std::string detect_in;
    CLI::App* detect = app.add_subcommand("detect", "Print the class report for a graph");
    detect->add_option("--in", detect_in, "Input graph file")->required();

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
    gen->add_option("--class", gen_args.cls, "Instance class")
        ->required()
        ->check(CLI::IsMember({"tree", "split", "bipartite", "diam2", "random"}));
    gen->add_option("--n", gen_args.n, "Vertex count")->required();
    gen->add_option("--red-frac", gen_args.red_frac, "Red probability / share")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", gen_args.seed, "PRNG seed");
    gen->add_option("--out", gen_args.out, "Output graph file (default stdout)");

    ReduceArgs reduce_args;
    CLI::App* reduce = app.add_subcommand("reduce", "Build a hardness gadget from a source instance");
    reduce->add_option("--from", reduce_args.from, "Source problem")
        ->required()
        ->check(CLI::IsMember({"ec3set", "ec3set-chordal", "ec3set-exist", "stpg", "hampath"}));
    reduce->add_option("--in", reduce_args.in, "Source instance file")->required();
    reduce->add_option("--out", reduce_args.out, "Gadget graph file")->required();
    reduce->add_option("--map", reduce_args.map, "Vertex-role map file (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_args);
        if (verify->parsed()) return cmd_verify(verify_graph, verify_solution);
        if (detect->parsed()) return cmd_detect(detect_in);
        if (gen->parsed()) return cmd_gen(gen_args);
        if (reduce->parsed()) return cmd_reduce(reduce_args);
    } catch (const bcs::BcsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
