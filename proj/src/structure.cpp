#include <algorithm>
#include <functional>
#include <vector>

#include "domedge/graph.hpp"

namespace domedge {

namespace {

// Low-link DFS collecting cut vertices and bridges; iterative-free since
// the graphs here are tiny.
struct LowLink {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<bool> is_cut;
    std::vector<int> bridges;
    int timer = 0;

    explicit LowLink(const Graph& g_)
        : g(g_), disc(g_.vertex_count(), -1), low(g_.vertex_count(), 0),
          is_cut(g_.vertex_count(), false) {}

    void dfs(int v, int parent_edge) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int u : g.neighbors(v)) {
            int e = g.edge_index(v, u);
            if (e == parent_edge) continue;
            if (disc[u] >= 0) {
                low[v] = std::min(low[v], disc[u]);
                continue;
            }
            ++children;
            dfs(u, e);
            low[v] = std::min(low[v], low[u]);
            if (low[u] > disc[v]) bridges.push_back(e);
            if (parent_edge >= 0 && low[u] >= disc[v]) is_cut[v] = true;
        }
        if (parent_edge < 0 && children >= 2) is_cut[v] = true;
    }
};

// Backtracking search for the longest induced path, counted in vertices.
// A vertex may extend the path only if it is adjacent to the last vertex
// and to no other path vertex (no chords).
struct InducedPathSearch {
    const Graph& g;
    int cap;
    int best = 0;
    std::vector<bool> in_path;
    std::vector<int> path;

    InducedPathSearch(const Graph& g_, int cap_)
        : g(g_), cap(cap_), in_path(g_.vertex_count(), false) {}

    bool chord_free(int w) const {
        for (int i = 0; i + 1 < static_cast<int>(path.size()); ++i) {
            if (g.has_edge(path[i], w)) return false;
        }
        return true;
    }

    void extend() {
        best = std::max(best, static_cast<int>(path.size()));
        if (static_cast<int>(path.size()) >= cap) return;
        int last = path.back();
        for (int w : g.neighbors(last)) {
            if (in_path[w] || !chord_free(w)) continue;
            in_path[w] = true;
            path.push_back(w);
            extend();
            path.pop_back();
            in_path[w] = false;
        }
    }

    int run() {
        if (cap <= 0) return 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            in_path[v] = true;
            path.assign(1, v);
            extend();
            in_path[v] = false;
        }
        return best;
    }
};

}  // namespace

int component_count(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    int components = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++components;
        stack.assign(1, s);
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
    }
    return components;
}

StructureReport structure_report(const Graph& g, int induced_path_cap) {
    if (induced_path_cap < 0)
        throw std::invalid_argument("induced path cap must be nonnegative");

    StructureReport report;
    report.connected = component_count(g) <= 1;
    report.max_degree = g.max_degree();

    LowLink ll(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (ll.disc[v] < 0) ll.dfs(v, -1);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (ll.is_cut[v]) report.cut_vertices.push_back(v);
    }
    report.bridges = std::move(ll.bridges);
    std::sort(report.bridges.begin(), report.bridges.end());

    report.longest_induced_path_vertices = InducedPathSearch(g, induced_path_cap).run();
    return report;
}

}  // namespace domedge
