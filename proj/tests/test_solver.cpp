#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "component_laws.hpp"
#include "mpc/components.hpp"
#include "mpc/cover.hpp"
#include "mpc/exact.hpp"
#include "mpc/gen.hpp"
#include "mpc/graph.hpp"
#include "mpc/matching.hpp"
#include "mpc/phase1.hpp"
#include "mpc/rescue.hpp"
#include "mpc/solver.hpp"

using namespace mpc;

using laws::graph_of;
using laws::random_gadget;
using laws::run_full;

namespace {

// One honest pipeline pass ending in the rescue fixpoint. Holds everything
// the final analysis points into; must never move after construction.
struct Flow {
    Graph g;
    Workspace ws;
    CoverOutcome co;
    RescueOutcome ro;
};

void run_solved(Flow& f, Graph g) {
    f.g = std::move(g);
    f.ws = run_phase1(f.g);
    f.co = run_cover(f.ws);
    f.ro = run_rescue_loop(f.ws, f.co.sat.hc, f.co.cover.cover, f.co.core);
}

const std::vector<std::pair<int, int>>& packed_edges() {
    static const std::vector<std::pair<int, int>> edges = {
        {0, 1}, {2, 3}, {4, 5}, {6, 7}, {0, 2}, {0, 4}, {1, 6}};
    return edges;
}

std::vector<std::pair<int, int>> shifted(const std::vector<std::pair<int, int>>& edges, int d) {
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : edges) out.push_back({u + d, v + d});
    return out;
}

long long exact_value(const Graph& g) { return exact_opt(g).sol.value; }

long long residual_opt(const Graph& g, const Census& census) {
    std::vector<char> drop(g.n, 0);
    for (int v : census.rc) drop[v] = 1;
    for (int v : census.uc) drop[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if (!drop[v]) keep.push_back(v);
    return exact_value(induced_subgraph(g, keep).graph);
}

}  // namespace

TEST_CASE("ratio thresholds are decided exactly") {
    CHECK(!census_ratio_exceeds(0, 1));
    CHECK(!census_ratio_exceeds(1, 1));
    CHECK(census_ratio_exceeds(2, 1));
    CHECK(!census_ratio_exceeds(1, 2));
    CHECK(!census_ratio_exceeds(4, 3));
    CHECK(census_ratio_exceeds(134, 100));
    CHECK(!census_ratio_exceeds(1338, 1000));
    CHECK(census_ratio_exceeds(1339, 1000));

    CHECK(ratio_within_bound(0, 0));
    CHECK(!ratio_within_bound(4, 0));
    CHECK(ratio_within_bound(0, 7));
    CHECK(ratio_within_bound(13, 7));
    CHECK(!ratio_within_bound(15, 8));
    CHECK(ratio_within_bound(28, 15));
    CHECK(ratio_within_bound(1873, 1000));
    CHECK(!ratio_within_bound(1874, 1000));

    Census c;
    c.a = 0;
    c.b = 0;
    CHECK(census_and_branch(c) == Branch::OutputComponents);
    c.a = 1;
    c.b = 1;
    CHECK(census_and_branch(c) == Branch::Recurse);
    c.a = 2;
    CHECK(census_and_branch(c) == Branch::OutputComponents);
}

TEST_CASE("small graphs fall back to exact search") {
    Graph none = Graph::from_edges(0, {});
    CHECK(solve(none).value == 0);

    Graph p7 = graph_of(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    SolveStats stats;
    Solution alg = solve(p7, stats);
    CHECK(alg.value == 7);
    CHECK(stats.depth == 0);
    CHECK(stats.moves == 0);
    CHECK(verify_solution(p7, alg));

    Graph tri = graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
    Solution none_found = solve(tri);
    CHECK(none_found.value == 0);
    CHECK(none_found.paths.empty());

    Graph c5 = graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(solve(c5).value == 5);

    Graph twin = graph_of(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}});
    Solution both = solve(twin);
    CHECK(both.value == 8);
    CHECK(verify_solution(twin, both));
}

TEST_CASE("separate structures are solved in one pass") {
    Graph g = graph_of(14, {{0, 1},
                            {1, 2},
                            {2, 3},
                            {3, 4},
                            {4, 5},
                            {5, 6},
                            {7, 8},
                            {8, 9},
                            {7, 9},
                            {10, 11},
                            {11, 12},
                            {12, 13}});
    SolveStats stats;
    Solution alg = solve(g, stats);
    std::string why;
    REQUIRE_MESSAGE(verify_solution(g, alg, &why), why);
    CHECK(alg.value == 11);
    CHECK(stats.depth == 0);
    CHECK(stats.moves == 0);
    CHECK(exact_value(g) == 11);
}

TEST_CASE("a witness edge lifts the assembled value") {
    laws::Pipeline p;
    run_full(p, graph_of(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {0, 2}, {0, 4}, {1, 6}, {1, 2}}));
    Census census = build_census(p.st);
    REQUIRE(census_and_branch(census) == Branch::OutputComponents);
    Solution assembled = assemble_component_solution(p.st);
    CHECK(assembled.value == 7);
    std::string why;
    REQUIRE_MESSAGE(verify_solution(p.g, assembled, &why), why);
    CHECK(exact_value(p.g) == 7);
}

TEST_CASE("a passing ratio outputs components despite a critical presence") {
    Graph g = graph_of(14, {{0, 1},
                            {2, 3},
                            {4, 5},
                            {6, 7},
                            {8, 9},
                            {10, 11},
                            {12, 13},
                            {0, 2},
                            {0, 4},
                            {1, 6},
                            {8, 10},
                            {9, 12},
                            {8, 3}});
    SolveStats stats;
    Solution alg = solve(g, stats);
    std::string why;
    REQUIRE_MESSAGE(verify_solution(g, alg, &why), why);
    CHECK(alg.value == 12);
    CHECK(stats.depth == 0);
    CHECK(stats.moves == 0);
    long long opt = exact_value(g);
    CHECK(ratio_within_bound(opt, alg.value));

    Flow f;
    run_solved(f, g);
    Census census = build_census(f.ro.state);
    CHECK(census.a == 2);
    CHECK(census.b == 1);
    CHECK(census_and_branch(census) == Branch::OutputComponents);
}

TEST_CASE("critical anchors recurse and keep their paths") {
    std::vector<std::pair<int, int>> edges = packed_edges();
    for (auto e : shifted(packed_edges(), 8)) edges.push_back(e);
    Graph g = graph_of(16, edges);

    SolveStats stats;
    Solution alg = solve(g, stats);
    std::string why;
    REQUIRE_MESSAGE(verify_solution(g, alg, &why), why);
    CHECK(alg.value == 10);
    CHECK(stats.depth == 1);
    CHECK(stats.moves == 0);
    REQUIRE(alg.paths.size() == 2);
    CHECK(alg.paths[0] == VertexPath{5, 4, 0, 2, 3});
    CHECK(alg.paths[1] == VertexPath{13, 12, 8, 10, 11});

    long long opt = exact_value(g);
    CHECK(opt == 12);
    CHECK(ratio_within_bound(opt, alg.value));

    Flow f;
    run_solved(f, g);
    Census census = build_census(f.ro.state);
    REQUIRE(census.b == 2);
    CHECK(census.a == 2);
    REQUIRE(census_and_branch(census) == Branch::Recurse);
    CHECK(census.rc == std::vector<int>{0, 8});
    CHECK(census.uc == std::vector<int>{2, 3, 4, 5, 10, 11, 12, 13});

    // Removing the anchors and their satellites costs the optimum at most
    // seven vertices per member of R.
    long long opt_rest = residual_opt(g, census);
    CHECK(opt_rest == 0);
    CHECK(opt <= opt_rest + 7 * census.a);

    SolveStats rstats;
    Solution rec = recurse_and_combine(g, f.ro.state, census, &rstats);
    CHECK(rec.value == alg.value);
    CHECK(rec.paths == alg.paths);
    CHECK(rstats.depth == 1);

    // A third copy pushes the residual graph above the base size without
    // changing the outcome shape.
    std::vector<std::pair<int, int>> edges3 = edges;
    for (auto e : shifted(packed_edges(), 16)) edges3.push_back(e);
    Graph g3 = graph_of(24, edges3);
    SolveStats stats3;
    Solution alg3 = solve(g3, stats3);
    REQUIRE_MESSAGE(verify_solution(g3, alg3, &why), why);
    CHECK(alg3.value == 15);
    CHECK(stats3.depth == 1);
    CHECK(stats3.moves == 0);
}

TEST_CASE("random instances stay within the certified ratio") {
    std::mt19937 rng(20260823);
    int outputs = 0, quiet = 0;
    for (int it = 0; it < 250; ++it) {
        int n = 5 + static_cast<int>(rng() % 8);
        long long maxm = 1LL * n * (n - 1) / 2;
        long long m = 1 + static_cast<long long>(rng() % maxm);
        Graph g = gen_gnm(n, m, rng());

        SolveStats stats;
        Solution alg = solve(g, stats);
        std::string why;
        REQUIRE_MESSAGE(verify_solution(g, alg, &why), why);

        long long opt = exact_value(g);
        CHECK(alg.value <= opt);
        CHECK(ratio_within_bound(opt, alg.value));

        Matching mm = max_cardinality_matching(g);
        CHECK(5LL * 2 * mm.size() >= 4 * opt);

        if (g.n <= 8) continue;
        Flow f;
        run_solved(f, g);
        CHECK(5LL * 2 * f.co.core.size() >= 4 * opt);

        Census census = build_census(f.ro.state);
        if (census_and_branch(census) == Branch::OutputComponents) {
            outputs += 1;
            Solution assembled = assemble_component_solution(f.ro.state);
            CHECK(assembled.value == alg.value);
            if (census.b == 0) {
                quiet += 1;
                // Strict margin; vacuous when nothing is coverable at all.
                if (opt > 0) CHECK(35 * assembled.value > 22 * opt);
            }
        } else {
            CHECK(opt <= residual_opt(g, census) + 7 * census.a);
        }
    }
    CHECK(outputs >= 40);
    CHECK(quiet >= 40);
}

TEST_CASE("gadget batteries stay within the ratio") {
    std::mt19937 rng(911);
    for (int it = 0; it < 20; ++it) {
        laws::Pipeline p;
        random_gadget(p, rng);
        SolveStats stats;
        Solution alg = solve(p.g, stats);
        std::string why;
        REQUIRE_MESSAGE(verify_solution(p.g, alg, &why), why);
        if (p.g.n <= 18) {
            long long opt = exact_value(p.g);
            CHECK(alg.value <= opt);
            CHECK(ratio_within_bound(opt, alg.value));
        }
    }
}

TEST_CASE("planted instances keep the guarantee at scale") {
    for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
        Graph g = gen_planted_paths(140, 14, 80, seed);
        Solution alg = solve(g);
        std::string why;
        REQUIRE_MESSAGE(verify_solution(g, alg, &why), why);
        CHECK(ratio_within_bound(4LL * 14, alg.value));
    }

    Graph big = gen_gnm(300, 700, 7);
    Solution alg = solve(big);
    std::string why;
    REQUIRE_MESSAGE(verify_solution(big, alg, &why), why);
}

TEST_CASE("the solver is deterministic") {
    Graph g = gen_gnm(60, 110, 20240817);
    SolveStats s1, s2;
    Solution a = solve(g, s1);
    Solution b = solve(g, s2);
    CHECK(a.value == b.value);
    CHECK(a.paths == b.paths);
    CHECK(s1.depth == s2.depth);
    CHECK(s1.moves == s2.moves);
}

TEST_CASE("defective packings are rejected with a reason") {
    Graph g = graph_of(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});

    Solution good;
    good.paths = {{0, 1, 2, 3}, {4, 5, 6, 7}};
    good.value = 8;
    std::string why;
    CHECK(verify_solution(g, good, &why));
    CHECK(why.empty());

    Solution tiny;
    tiny.paths = {{0, 1, 2}};
    tiny.value = 3;
    CHECK(!verify_solution(g, tiny, &why));
    CHECK(!why.empty());

    Solution gap;
    gap.paths = {{0, 1, 2, 4}};
    gap.value = 4;
    CHECK(!verify_solution(g, gap, &why));

    Solution twice;
    twice.paths = {{0, 1, 2, 3}, {3, 4, 5, 6}};
    twice.value = 8;
    CHECK(!verify_solution(g, twice, &why));

    Solution off;
    off.paths = {{0, 1, 2, 3}};
    off.value = 5;
    CHECK(!verify_solution(g, off, &why));
}
