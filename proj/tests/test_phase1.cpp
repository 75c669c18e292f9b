#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpc/exact.hpp"
#include "mpc/gen.hpp"
#include "mpc/phase1.hpp"
#include "oracles.hpp"

using namespace mpc;

namespace {

int count_shape(const HComponents& hc, Shape s, int order = -1) {
    int c = 0;
    for (const auto& sh : hc.shapes)
        if (sh.shape == s && (order < 0 || sh.order == order)) ++c;
    return c;
}

}  // namespace

TEST_CASE("two matched edges without an outside vertex stay put") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    Workspace ws = init_workspace(g);
    CHECK(ws.m.size() == 2);
    CHECK(!find_augmenting_triple(ws).has_value());
    CHECK(run_step_1_1(ws) == 0);
    CHECK(run_step_1_2(ws) == 0);
    CHECK(verify_after_attach(ws).empty());
}

TEST_CASE("first-condition triple merges two edge components") {
    Graph g = Graph::from_edges(5, {{0, 1}, {2, 3}, {4, 0}, {4, 2}});
    Workspace ws = init_workspace(g);
    REQUIRE(ws.m.size() == 2);
    auto t = find_augmenting_triple(ws);
    REQUIRE(t.has_value());
    CHECK(t->c1);
    CHECK(t->u0 == 4);
    apply_triple(ws, *t);
    CHECK(ws.m.size() == 2);  // matching untouched
    CHECK(ws.m_set.contains(0, 1));
    HComponents hc = h_components(ws);
    REQUIRE(hc.comps.size() == 1);
    CHECK(count_shape(hc, Shape::Path, 5) == 1);
    CHECK(verify_after_augmenting(ws).empty());
}

TEST_CASE("second-condition triple swaps a matching edge") {
    Graph g = Graph::from_edges(5, {{0, 1}, {2, 3}, {4, 0}, {1, 2}});
    Workspace ws = init_workspace(g);
    REQUIRE(ws.m.size() == 2);
    auto t = find_augmenting_triple(ws);
    REQUIRE(t.has_value());
    CHECK(!t->c1);
    CHECK(t->u0 == 4);
    CHECK(t->v0 == 0);
    CHECK(t->w0 == 1);
    CHECK(t->v1 == 2);
    apply_triple(ws, *t);
    CHECK(ws.m.size() == 2);
    CHECK(ws.m_set.contains(4, 0));
    CHECK(!ws.m_set.contains(0, 1));
    CHECK(ws.m.mate[1] == -1);  // new 5-path middle
    HComponents hc = h_components(ws);
    REQUIRE(hc.comps.size() == 1);
    CHECK(count_shape(hc, Shape::Path, 5) == 1);
    CHECK(verify_after_augmenting(ws).empty());
}

TEST_CASE("both conditions prefer the first") {
    Graph g = Graph::from_edges(5, {{0, 1}, {2, 3}, {4, 0}, {4, 2}, {1, 2}});
    Workspace ws = init_workspace(g);
    auto t = find_augmenting_triple(ws);
    REQUIRE(t.has_value());
    CHECK(t->c1);
}

TEST_CASE("stale triples are rejected") {
    Graph g = Graph::from_edges(5, {{0, 1}, {2, 3}, {4, 0}, {4, 2}});
    Workspace ws = init_workspace(g);
    auto t = find_augmenting_triple(ws);
    REQUIRE(t.has_value());
    apply_triple(ws, *t);
    CHECK_THROWS_AS(apply_triple(ws, *t), GraphError);
}

TEST_CASE("attachment builds stars and triangles") {
    SUBCASE("star") {
        Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
        Workspace ws = init_workspace(g);
        CHECK(run_step_1_1(ws) == 0);
        CHECK(run_step_1_2(ws) == 2);
        HComponents hc = h_components(ws);
        REQUIRE(hc.comps.size() == 1);
        CHECK(hc.shapes[0].shape == Shape::Star);
        CHECK(hc.shapes[0].center == 0);
        CHECK(verify_after_attach(ws).empty());
    }
    SUBCASE("triangle") {
        Graph g = Graph::from_edges(3, {{0, 1}, {2, 0}, {2, 1}});
        Workspace ws = init_workspace(g);
        CHECK(run_step_1_1(ws) == 0);
        CHECK(run_step_1_2(ws) == 2);
        HComponents hc = h_components(ws);
        REQUIRE(hc.comps.size() == 1);
        CHECK(hc.shapes[0].shape == Shape::Triangle);
        CHECK(verify_after_attach(ws).empty());
    }
}

TEST_CASE("verifiers flag doctored structures") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    Workspace ws = run_phase1(g);
    CHECK(verify_after_attach(ws).empty());
    Workspace bad = ws;
    bad.h_edges.insert(1, 2);  // glues the two matched edges into a 4-path
    CHECK(!verify_after_attach(bad).empty());

    Workspace bad2 = ws;
    bad2.m_set.erase(0, 1);
    bad2.m.mate[0] = bad2.m.mate[1] = -1;
    CHECK(!verify_after_attach(bad2).empty());
}

TEST_CASE("random graphs: invariants after each step") {
    for (int seed = 0; seed < 120; ++seed) {
        int n = 5 + seed % 10;
        long long maxm = static_cast<long long>(n) * (n - 1) / 2;
        Graph g = gen_gnm(n, (3 * seed + n) % (maxm + 1), 31000 + seed);
        Workspace ws = init_workspace(g);
        int matching_size = ws.m.size();
        CHECK(matching_size == oracle::brute_matching_size(g));

        int before_5 = 0;
        while (auto t = find_augmenting_triple(ws)) {
            apply_triple(ws, *t);
            HComponents hc = h_components(ws);
            int now_5 = count_shape(hc, Shape::Path, 5);
            CHECK(now_5 == before_5 + 1);  // each triple yields one more 5-path
            before_5 = now_5;
            CHECK(ws.m.size() == matching_size);
        }
        CHECK(verify_after_augmenting(ws).empty());
        run_step_1_2(ws);
        CHECK(verify_after_attach(ws).empty());
        CHECK(ws.m.size() == matching_size);

        // matched vertices cover at least 4/5 of the optimum
        long long opt = exact_opt(g).sol.value;
        CHECK(5 * 2 * matching_size >= 4 * opt);
    }
}
