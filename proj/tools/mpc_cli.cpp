#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mpc/components.hpp"
#include "mpc/cover.hpp"
#include "mpc/exact.hpp"
#include "mpc/gen.hpp"
#include "mpc/graph.hpp"
#include "mpc/phase1.hpp"
#include "mpc/rescue.hpp"
#include "mpc/solver.hpp"

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;   // a produced artifact breaks its guarantee
constexpr int kInputError = 2;  // unreadable or malformed input

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    auto end = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
}

void write_text(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw mpc::GraphError("cannot write " + out);
    f << text;
}

const char* center_kind_name(mpc::CenterKind kind) {
    switch (kind) {
        case mpc::CenterKind::FivePath: return "five-path";
        case mpc::CenterKind::Edge: return "edge";
        case mpc::CenterKind::Star: return "star";
    }
    return "unknown";
}

struct FamilyOpts {
    std::string family = "gnm";
    int n = 10;
    long long m = 15;
    int d = 3;
    int paths = 2;
    long long noise = 0;
};

mpc::Graph make_instance(const FamilyOpts& o, std::uint64_t seed) {
    if (o.family == "gnm") return mpc::gen_gnm(o.n, o.m, seed);
    if (o.family == "regular") return mpc::gen_regular(o.n, o.d, seed);
    return mpc::gen_planted_paths(o.n, o.paths, o.noise, seed);
}

void add_family_options(CLI::App* cmd, FamilyOpts& o) {
    cmd->add_option("--family", o.family, "instance family")
        ->check(CLI::IsMember({"gnm", "regular", "planted-paths"}));
    cmd->add_option("--n", o.n, "vertex count");
    cmd->add_option("--m", o.m, "edge count (gnm)");
    cmd->add_option("--d", o.d, "degree (regular)");
    cmd->add_option("--paths", o.paths, "planted path count (planted-paths)");
    cmd->add_option("--noise", o.noise, "extra random edges (planted-paths)");
}

struct SolveOpts {
    std::string in, out;
    bool verify = false;
    bool trace = false;
};

int run_solve(const SolveOpts& o) {
    mpc::Graph g = mpc::load_graph_file(o.in);
    mpc::SolveStats stats;
    std::vector<std::string> trace;
    auto start = std::chrono::steady_clock::now();
    mpc::Solution sol = mpc::solve(g, stats, o.trace ? &trace : nullptr);
    long long ms = elapsed_ms(start);
    for (const std::string& line : trace) std::cerr << line << "\n";

    if (o.verify) {
        std::string why;
        if (!mpc::verify_solution(g, sol, &why)) {
            std::cerr << "verification failed: " << why << "\n";
            return kViolation;
        }
    }

    json j{{"n", g.n},
           {"m", g.m},
           {"value", sol.value},
           {"paths", sol.paths},
           {"moves", stats.moves},
           {"depth", stats.depth},
           {"ms", ms}};
    if (o.verify) j["verified"] = true;
    write_text(o.out, j.dump(2) + "\n");
    return kOk;
}

struct ExactOpts {
    std::string in, out;
    int cap = 20;
};

int run_exact(const ExactOpts& o) {
    mpc::Graph g = mpc::load_graph_file(o.in);
    if (g.n > o.cap) {
        std::cerr << "error: " << g.n << " vertices exceed the cap " << o.cap << "\n";
        return kInputError;
    }
    mpc::ExactConfig cfg;
    cfg.cap = o.cap;
    mpc::ExactResult er = mpc::exact_opt(g, cfg);
    json j{{"n", g.n},
           {"m", g.m},
           {"value", er.sol.value},
           {"paths", er.sol.paths},
           {"exact", er.exact}};
    write_text(o.out, j.dump(2) + "\n");
    return kOk;
}

struct VerifyOpts {
    std::string graph, solution;
};

int run_verify(const VerifyOpts& o) {
    mpc::Graph g = mpc::load_graph_file(o.graph);
    std::ifstream f(o.solution);
    if (!f) throw mpc::GraphError("cannot read " + o.solution);
    json j = json::parse(f);
    mpc::Solution sol;
    sol.value = j.at("value").get<long long>();
    sol.paths = j.at("paths").get<std::vector<mpc::VertexPath>>();
    std::string why;
    if (!mpc::verify_solution(g, sol, &why)) {
        std::cout << why << "\n";
        return kViolation;
    }
    std::cout << "ok: " << sol.paths.size() << " paths covering " << sol.value << " vertices\n";
    return kOk;
}

struct GenOpts {
    FamilyOpts fam;
    std::uint64_t seed = 1;
    std::string out;
};

int run_gen(const GenOpts& o) {
    mpc::Graph g = make_instance(o.fam, o.seed);
    std::ostringstream s;
    mpc::dump_graph(g, s);
    write_text(o.out, s.str());
    return kOk;
}

struct CensusOpts {
    std::string in, out;
};

int run_census(const CensusOpts& o) {
    mpc::Graph g = mpc::load_graph_file(o.in);
    mpc::Workspace ws = mpc::run_phase1(g);
    mpc::CoverOutcome co = mpc::run_cover(ws);
    mpc::RescueOutcome ro =
        mpc::run_rescue_loop(ws, co.sat.hc, co.cover.cover, co.core);
    mpc::Census c = mpc::build_census(ro.state);

    json comps = json::array();
    for (const mpc::HcComp& k : ro.state.comps)
        comps.push_back(json{{"kind", center_kind_name(k.kind)},
                             {"composite", k.composite},
                             {"vertices", k.vertices},
                             {"anchors", k.anchors},
                             {"support", k.support},
                             {"s", k.s},
                             {"opt", k.opt},
                             {"opt_value", k.opt_value},
                             {"critical", k.critical},
                             {"responsible", k.responsible},
                             {"critical_and_responsible", k.critical_and_responsible},
                             {"r_count", k.r_count}});

    json j{{"n", g.n},
           {"m", g.m},
           {"moves", ro.moves},
           {"isolated_bad", ro.state.isolated_bad.size()},
           {"census",
            json{{"k", std::vector<long long>(c.k_count, c.k_count + 6)},
                 {"k1c", c.k1c},
                 {"k2c", c.k2c},
                 {"a", c.a},
                 {"b", c.b},
                 {"r_vertices", c.r_vertices},
                 {"rc", c.rc},
                 {"uc", c.uc}}},
           {"components", comps}};
    write_text(o.out, j.dump(2) + "\n");
    return kOk;
}

struct BenchOpts {
    FamilyOpts fam;
    int count = 10;
    std::uint64_t seed = 1;
    bool ratio = false;
    std::string out;
};

int run_bench(const BenchOpts& o) {
    if (o.ratio && o.fam.n > 12) {
        std::cerr << "error: ratio mode compares against the exact optimum; use --n <= 12\n";
        return kInputError;
    }
    std::ostringstream csv;
    csv << "instance,n,m,alg,opt,ratio,moves,depth,ms\n";
    bool violated = false;
    bool have_ratio = false;
    double max_ratio = 0.0;
    for (int i = 0; i < o.count; ++i) {
        mpc::Graph g = make_instance(o.fam, o.seed + static_cast<std::uint64_t>(i));
        auto start = std::chrono::steady_clock::now();
        mpc::SolveStats stats;
        mpc::Solution sol = mpc::solve(g, stats);
        long long ms = elapsed_ms(start);

        std::string why;
        if (!mpc::verify_solution(g, sol, &why)) {
            std::cerr << "instance " << i << ": " << why << "\n";
            violated = true;
        }

        csv << i << ',' << g.n << ',' << g.m << ',' << sol.value << ',';
        if (o.ratio) {
            long long opt = mpc::exact_opt(g).sol.value;
            if (!mpc::ratio_within_bound(opt, sol.value)) {
                std::cerr << "instance " << i << ": ratio bound broken, opt " << opt << " alg "
                          << sol.value << "\n";
                violated = true;
            }
            csv << opt << ',';
            if (sol.value == 0) {
                csv << (opt == 0 ? "1.000000" : "inf");
            } else {
                double ratio = static_cast<double>(opt) / static_cast<double>(sol.value);
                if (!have_ratio || ratio > max_ratio) max_ratio = ratio;
                have_ratio = true;
                csv << std::fixed << std::setprecision(6) << ratio;
            }
            csv << ',';
        } else {
            csv << ",,";
        }
        csv << stats.moves << ',' << stats.depth << ',' << ms << "\n";
    }
    if (o.count > 0) {
        csv << "summary,,,,,";
        if (have_ratio) csv << std::fixed << std::setprecision(6) << max_ratio;
        csv << ",,,\n";
    }
    write_text(o.out, csv.str());
    return violated ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-disjoint path cover solver; every path keeps at least four vertices"};
    app.require_subcommand(1);

    SolveOpts so;
    CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance, emit solution JSON");
    solve_cmd->add_option("input", so.in, "graph file")->required();
    solve_cmd->add_option("--out", so.out, "output file (default stdout)");
    solve_cmd->add_flag("--verify", so.verify, "re-check the solution before emitting");
    solve_cmd->add_flag("--trace", so.trace, "log phases and rescue moves to stderr");

    ExactOpts eo;
    CLI::App* exact_cmd = app.add_subcommand("exact", "exact optimum by exhaustive search");
    exact_cmd->add_option("input", eo.in, "graph file")->required();
    exact_cmd->add_option("--cap", eo.cap, "largest accepted vertex count");
    exact_cmd->add_option("--out", eo.out, "output file (default stdout)");

    VerifyOpts vo;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check a solution JSON against a graph");
    verify_cmd->add_option("graph", vo.graph, "graph file")->required();
    verify_cmd->add_option("solution", vo.solution, "solution JSON file")->required();

    GenOpts go;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random instance");
    add_family_options(gen_cmd, go.fam);
    gen_cmd->add_option("--seed", go.seed, "random seed");
    gen_cmd->add_option("--out", go.out, "output file (default stdout)");

    CensusOpts co;
    CLI::App* census_cmd =
        app.add_subcommand("census", "component census after the rescue loop, as JSON");
    census_cmd->add_option("input", co.in, "graph file")->required();
    census_cmd->add_option("--out", co.out, "output file (default stdout)");

    BenchOpts bo;
    CLI::App* bench_cmd = app.add_subcommand("bench", "batch runs, CSV report");
    add_family_options(bench_cmd, bo.fam);
    bench_cmd->add_option("--count", bo.count, "number of instances");
    bench_cmd->add_option("--seed", bo.seed, "seed of the first instance");
    bench_cmd->add_flag("--ratio", bo.ratio, "compare against the exact optimum");
    bench_cmd->add_option("--out", bo.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(so);
        if (exact_cmd->parsed()) return run_exact(eo);
        if (verify_cmd->parsed()) return run_verify(vo);
        if (gen_cmd->parsed()) return run_gen(go);
        if (census_cmd->parsed()) return run_census(co);
        if (bench_cmd->parsed()) return run_bench(bo);
    } catch (const mpc::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
