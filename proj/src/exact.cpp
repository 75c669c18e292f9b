#include "mpc/exact.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <chrono>
#include <unordered_map>

namespace mpc {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kDomCap = 1u << 21;

struct Searcher {
    const Graph& g;
    std::uint64_t free;  // vertices still available
    int n_free;
    int gained = 0;
    std::vector<VertexPath> current;
    int best_value = 0;
    std::vector<VertexPath> best_paths;
    std::unordered_map<std::uint64_t, int> dom;  // used-mask -> best gained seen
    Clock::time_point deadline;
    bool timed_out = false;
    unsigned tick = 0;

    // in-progress path around the pivot
    std::vector<int> arm1, arm2;
    int pivot = -1;

    explicit Searcher(const Graph& gr) : g(gr) {
        free = gr.n == 64 ? ~0ull : ((1ull << gr.n) - 1);
        n_free = gr.n;
    }

    bool out_of_time() {
        if (timed_out) return true;
        if ((++tick & 1023u) == 0 && Clock::now() > deadline) timed_out = true;
        return timed_out;
    }

    void take(int v) { free &= ~(1ull << v); --n_free; }
    void put(int v) { free |= 1ull << v; ++n_free; }

    void record() {
        if (gained > best_value) {
            best_value = gained;
            best_paths = current;
        }
    }

    void rec() {
        record();
        if (gained + n_free <= best_value) return;  // cannot strictly improve
        if (n_free < 4 || out_of_time()) return;
        std::uint64_t used = ~free;
        if (dom.size() < kDomCap) {
            auto [it, fresh] = dom.try_emplace(used, gained);
            if (!fresh) {
                // Same remaining graph reached before with at least this gain.
                if (it->second >= gained) return;
                it->second = gained;
            }
        } else if (auto it = dom.find(used); it != dom.end()) {
            if (it->second >= gained) return;
            it->second = gained;
        }
        int v = std::countr_zero(free);
        pivot = v;
        take(v);
        grow_arm1();
        pivot = -1;
        rec();  // leave v uncovered
        put(v);
    }

    // Path through the pivot is reverse(arm1) + pivot + arm2; arm1 may be
    // empty (pivot is an endpoint), in which case arm2 carries the whole
    // path. Nonempty arm1 requires arm2 with a larger first vertex, so each
    // path is enumerated exactly once.
    void grow_arm1() {
        if (static_cast<int>(arm1.size()) < 6) {
            int end = arm1.empty() ? pivot : arm1.back();
            for (int w : g.adj[end]) {
                if (!(free >> w & 1)) continue;
                arm1.push_back(w);
                take(w);
                grow_arm1();
                put(w);
                arm1.pop_back();
            }
        }
        grow_arm2();
    }

    void grow_arm2() {
        int total = 1 + static_cast<int>(arm1.size() + arm2.size());
        if (total < 7) {
            int end = arm2.empty() ? pivot : arm2.back();
            for (int w : g.adj[end]) {
                if (!(free >> w & 1)) continue;
                if (arm2.empty() && !arm1.empty() && w <= arm1.front()) continue;
                arm2.push_back(w);
                take(w);
                grow_arm2();
                put(w);
                arm2.pop_back();
            }
        }
        if (total >= 4 && !arm2.empty()) place();
    }

    void place() {
        VertexPath path(arm1.rbegin(), arm1.rend());
        path.push_back(pivot);
        path.insert(path.end(), arm2.begin(), arm2.end());
        int sz = static_cast<int>(path.size());
        current.push_back(std::move(path));
        gained += sz;
        std::vector<int> saved1, saved2;
        saved1.swap(arm1);
        saved2.swap(arm2);
        int saved_pivot = pivot;
        rec();
        pivot = saved_pivot;
        saved1.swap(arm1);
        saved2.swap(arm2);
        gained -= sz;
        current.pop_back();
    }
};

}  // namespace

ExactResult exact_opt(const Graph& g, const ExactConfig& cfg) {
    if (g.n > cfg.cap)
        throw GraphError("exact solver: " + std::to_string(g.n) + " vertices exceeds cap " +
                         std::to_string(cfg.cap));
    if (g.n > 64) throw GraphError("exact solver: more than 64 vertices unsupported");
    Searcher s(g);
    s.deadline = Clock::now() + std::chrono::milliseconds(cfg.budget_ms);
    s.rec();
    ExactResult res;
    res.sol.paths = std::move(s.best_paths);
    res.sol.value = s.best_value;
    res.exact = !s.timed_out;
    std::string why;
    if (!verify_solution(g, res.sol, &why)) throw GraphError("exact solver produced " + why);
    return res;
}

bool verify_solution(const Graph& g, const Solution& sol, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = "invalid solution: " + msg;
        return false;
    };
    std::vector<char> used(g.n, 0);
    long long total = 0;
    for (const auto& p : sol.paths) {
        if (p.size() < 4 || p.size() > 7) return fail("path with " + std::to_string(p.size()) + " vertices");
        for (int v : p) {
            if (v < 0 || v >= g.n) return fail("vertex out of range");
            if (used[v]) return fail("vertex " + std::to_string(v) + " reused");
            used[v] = 1;
        }
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (!g.has_edge(p[i], p[i + 1]))
                return fail("missing edge (" + std::to_string(p[i]) + ", " + std::to_string(p[i + 1]) + ")");
        total += static_cast<long long>(p.size());
    }
    if (total != sol.value) return fail("declared value " + std::to_string(sol.value) +
                                        " but paths cover " + std::to_string(total));
    return true;
}

}  // namespace mpc
