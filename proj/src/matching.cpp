#include "mpc/matching.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <boost/graph/maximum_weighted_matching.hpp>

namespace mpc {

int Matching::size() const {
    int covered = 0;
    for (int w : mate)
        if (w >= 0) ++covered;
    assert(covered % 2 == 0);
    return covered / 2;
}

std::vector<std::pair<int, int>> Matching::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v)
        if (mate[v] > v) out.emplace_back(v, mate[v]);
    return out;
}

BlossomSearch::BlossomSearch(const Graph& g)
    : g_(g), p_(g.n), base_(g.n), queue_(g.n), used_(g.n), blossom_(g.n), lca_mark_(g.n) {}

void BlossomSearch::mark_path(int v, int b, int child, const std::vector<int>& mate) {
    while (base_[v] != b) {
        blossom_[base_[v]] = 1;
        blossom_[base_[mate[v]]] = 1;
        p_[v] = child;
        child = mate[v];
        v = p_[mate[v]];
    }
}

int BlossomSearch::lca(int a, int b, const std::vector<int>& mate) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
    for (int v = a;;) {
        v = base_[v];
        lca_mark_[v] = 1;
        if (mate[v] == -1) break;
        v = p_[mate[v]];
    }
    for (int v = b;;) {
        v = base_[v];
        if (lca_mark_[v]) return v;
        v = p_[mate[v]];
    }
}

void BlossomSearch::flip_to(int u, std::vector<int>& mate) {
    // flip the alternating path from u back to the root of the search tree
    while (u != -1) {
        int pv = p_[u], ppv = mate[pv];
        mate[u] = pv;
        mate[pv] = u;
        u = ppv;
    }
}

bool BlossomSearch::augment_from(int root, std::vector<int>& mate,
                                 const std::vector<char>* releasable) {
    assert(mate[root] == -1);
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(p_.begin(), p_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    int qh = 0, qt = 0;
    queue_[qt++] = root;
    while (qh < qt) {
        int v = queue_[qh++];
        for (int to : g_.adj[v]) {
            if (base_[v] == base_[to] || mate[v] == to) continue;
            if (to == root || (mate[to] != -1 && p_[mate[to]] != -1)) {
                // odd cycle: contract the blossom
                int curbase = lca(v, to, mate);
                std::fill(blossom_.begin(), blossom_.end(), 0);
                mark_path(v, curbase, to, mate);
                mark_path(to, curbase, v, mate);
                for (int i = 0; i < g_.n; ++i)
                    if (blossom_[base_[i]]) {
                        base_[i] = curbase;
                        if (!used_[i]) {
                            used_[i] = 1;
                            queue_[qt++] = i;
                            // i just became evenly reachable; the alternating
                            // path to it ends through its matched edge, so a
                            // releasable i can hand its coverage to root
                            if (releasable && (*releasable)[i] && mate[i] != -1) {
                                int w = mate[i];
                                mate[i] = -1;
                                flip_to(w, mate);
                                return true;
                            }
                        }
                    }
            } else if (p_[to] == -1) {
                p_[to] = v;
                if (mate[to] == -1) {
                    flip_to(to, mate);
                    return true;
                }
                int w = mate[to];
                if (releasable && (*releasable)[w]) {
                    mate[w] = -1;
                    flip_to(to, mate);
                    return true;
                }
                used_[w] = 1;
                queue_[qt++] = w;
            }
        }
    }
    return false;
}

Matching max_cardinality_matching(const Graph& g) {
    Matching m;
    m.mate.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        if (m.mate[v] != -1) continue;
        for (int w : g.adj[v])
            if (m.mate[w] == -1) {
                m.mate[v] = w;
                m.mate[w] = v;
                break;
            }
    }
    BlossomSearch search(g);
    for (int v = 0; v < g.n; ++v)
        if (m.mate[v] == -1) search.augment_from(v, m.mate);
    return m;
}

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_weight_t, long long>>;

int boost_max_matching_size(const Graph& g) {
    BoostGraph bg(g.n);
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(g.n);
    bool ok = boost::checked_edmonds_maximum_cardinality_matching(bg, &mate[0]);
    assert(ok);
    (void)ok;
    return static_cast<int>(boost::matching_size(bg, &mate[0]));
}

}  // namespace

bool is_maximum_matching(const Graph& g, const Matching& m) {
    if (static_cast<int>(m.mate.size()) != g.n) return false;
    for (int v = 0; v < g.n; ++v) {
        int w = m.mate[v];
        if (w == v || w >= g.n) return false;
        if (w >= 0 && (m.mate[w] != v || !g.has_edge(v, w))) return false;
    }
    return m.size() == boost_max_matching_size(g);
}

std::optional<WeightedMatchingResult> max_weight_perfect_matching(
    int n, const std::vector<std::pair<int, int>>& edges, const std::vector<long long>& weights) {
    assert(edges.size() == weights.size());
    if (n % 2 != 0) return std::nullopt;
    // Uniform shift makes all weights positive so cardinality dominates and
    // the maximum-weight matching is perfect whenever one exists.
    long long shift = 1;
    for (long long w : weights) shift += std::llabs(w);
    BoostGraph bg(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        assert(u >= 0 && u < n && v >= 0 && v < n && u != v);
        boost::add_edge(u, v, weights[i] + shift, bg);
    }
    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(n);
    boost::maximum_weighted_matching(bg, &mate[0]);
    WeightedMatchingResult res;
    res.matching.mate.assign(n, -1);
    auto null_v = boost::graph_traits<BoostGraph>::null_vertex();
    for (int v = 0; v < n; ++v) {
        if (mate[v] == null_v) return std::nullopt;
        res.matching.mate[v] = static_cast<int>(mate[v]);
    }
    EdgeSet chosen;
    for (int v = 0; v < n; ++v)
        if (res.matching.mate[v] > v) chosen.insert(v, res.matching.mate[v]);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (chosen.contains(edges[i].first, edges[i].second)) res.weight += weights[i];
    return res;
}

}  // namespace mpc
