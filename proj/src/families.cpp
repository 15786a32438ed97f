#include "domedge/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace domedge {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

int param(const FamilySpec& spec, size_t i) { return spec.params[i]; }

void validate_spec(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilyKind::path:
            require(p.size() == 1 && p[0] >= 1, "path requires n >= 1");
            break;
        case FamilyKind::cycle:
            require(p.size() == 1 && p[0] >= 3, "cycle requires n >= 3");
            break;
        case FamilyKind::complete:
            require(p.size() == 1 && p[0] >= 1, "complete requires n >= 1");
            break;
        case FamilyKind::complete_bipartite:
            require(p.size() == 2 && p[0] >= 1 && p[1] >= 1,
                    "complete_bipartite requires r,s >= 1");
            break;
        case FamilyKind::star:
            require(p.size() == 1 && p[0] >= 1, "star requires k >= 1");
            break;
        case FamilyKind::bistar:
            require(p.size() == 2 && p[0] >= 1 && p[1] >= 1, "bistar requires p,q >= 1");
            break;
        case FamilyKind::wheel:
            // W_3 would need a multigraph rim; the family starts at W_4 = K_4.
            require(p.size() == 1 && p[0] >= 4, "wheel requires n >= 4");
            break;
        case FamilyKind::friendship:
            require(p.size() == 1 && p[0] >= 1, "friendship requires n >= 1");
            break;
    }
}

}  // namespace

FamilySpec make_family_spec(const std::string& name, const std::vector<int>& params) {
    static const std::map<std::string, FamilyKind> kinds = {
        {"path", FamilyKind::path},
        {"cycle", FamilyKind::cycle},
        {"complete", FamilyKind::complete},
        {"complete_bipartite", FamilyKind::complete_bipartite},
        {"star", FamilyKind::star},
        {"bistar", FamilyKind::bistar},
        {"wheel", FamilyKind::wheel},
        {"friendship", FamilyKind::friendship},
    };
    auto it = kinds.find(name);
    require(it != kinds.end(), "unknown family: " + name);
    FamilySpec spec{it->second, params};
    validate_spec(spec);
    return spec;
}

const char* family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::path: return "path";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::complete: return "complete";
        case FamilyKind::complete_bipartite: return "complete_bipartite";
        case FamilyKind::star: return "star";
        case FamilyKind::bistar: return "bistar";
        case FamilyKind::wheel: return "wheel";
        case FamilyKind::friendship: return "friendship";
    }
    return "?";
}

std::string describe(const FamilySpec& spec) {
    std::string out = family_name(spec.kind);
    out += "(";
    for (size_t i = 0; i < spec.params.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(spec.params[i]);
    }
    out += ")";
    return out;
}

Graph generate(const FamilySpec& spec) {
    validate_spec(spec);
    std::vector<std::pair<int, int>> edges;
    switch (spec.kind) {
        case FamilyKind::path: {
            int n = param(spec, 0);
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return Graph::build(n, edges);
        }
        case FamilyKind::cycle: {
            int n = param(spec, 0);
            for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
            return Graph::build(n, edges);
        }
        case FamilyKind::complete: {
            int n = param(spec, 0);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return Graph::build(n, edges);
        }
        case FamilyKind::complete_bipartite: {
            int r = param(spec, 0), s = param(spec, 1);
            for (int u = 0; u < r; ++u)
                for (int v = 0; v < s; ++v) edges.emplace_back(u, r + v);
            return Graph::build(r + s, edges);
        }
        case FamilyKind::star: {
            int k = param(spec, 0);
            for (int v = 1; v <= k; ++v) edges.emplace_back(0, v);
            return Graph::build(k + 1, edges);
        }
        case FamilyKind::bistar: {
            int p = param(spec, 0), q = param(spec, 1);
            edges.emplace_back(0, 1);  // the two centers
            for (int i = 0; i < p; ++i) edges.emplace_back(0, 2 + i);
            for (int i = 0; i < q; ++i) edges.emplace_back(1, 2 + p + i);
            return Graph::build(p + q + 2, edges);
        }
        case FamilyKind::wheel: {
            int n = param(spec, 0);  // hub 0 joined to the rim cycle 1..n-1
            int rim = n - 1;
            for (int i = 0; i < rim; ++i) {
                edges.emplace_back(0, 1 + i);
                edges.emplace_back(1 + i, 1 + (i + 1) % rim);
            }
            return Graph::build(n, edges);
        }
        case FamilyKind::friendship: {
            int n = param(spec, 0);  // triangle i uses vertices 1+2i, 2+2i
            for (int i = 0; i < n; ++i) {
                edges.emplace_back(0, 1 + 2 * i);
                edges.emplace_back(0, 2 + 2 * i);
                edges.emplace_back(1 + 2 * i, 2 + 2 * i);
            }
            return Graph::build(2 * n + 1, edges);
        }
    }
    throw std::logic_error("unreachable family kind");
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) edges.emplace_back(u, ng + v);
    return Graph::build(ng + nh, edges);
}

Graph corona(const Graph& g, const Graph& h) {
    const int n = g.vertex_count(), k = h.vertex_count();
    if (n < 1) throw std::invalid_argument("corona requires a nonempty left graph");
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int i = 0; i < n; ++i) {
        const int base = n + i * k;  // i-th copy of H
        for (auto [u, v] : h.edges()) edges.emplace_back(base + u, base + v);
        for (int v = 0; v < k; ++v) edges.emplace_back(i, base + v);
    }
    return Graph::build(n * (1 + k), edges);
}

Graph subdivide(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("subdivision requires k >= 1");
    if (k == 1) return g;

    const int n = g.vertex_count(), m = g.edge_count();
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(n + (k - 1) * m);
    for (int v = 0; v < n; ++v) labels[v] = g.label(v);

    int next = n;
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edge(e);
        // internal vertices x_1 .. x_{k-1}, ordered by distance from u (< v)
        int prev = u;
        for (int l = 1; l < k; ++l) {
            labels[next] = "x" + std::to_string(l) + "^{" + std::to_string(u) + "," +
                           std::to_string(v) + "}";
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph::build(n + (k - 1) * m, edges, std::move(labels));
}

Graph remove_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("vertex index out of range: " + std::to_string(v));
    std::vector<std::pair<int, int>> edges;
    auto shift = [v](int w) { return w > v ? w - 1 : w; };
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        edges.emplace_back(shift(a), shift(b));
    }
    return Graph::build(g.vertex_count() - 1, edges);
}

Graph remove_edge(const Graph& g, int e) {
    if (e < 0 || e >= g.edge_count())
        throw std::invalid_argument("edge index out of range: " + std::to_string(e));
    std::vector<std::pair<int, int>> edges;
    for (int f = 0; f < g.edge_count(); ++f) {
        if (f != e) edges.push_back(g.edge(f));
    }
    return Graph::build(g.vertex_count(), edges);
}

Graph contract_edge(const Graph& g, int e) {
    auto [u, v] = g.edge(e);  // u < v; v is merged into u
    std::set<std::pair<int, int>> edges;
    auto map_vertex = [u = u, v = v](int w) {
        if (w == v) w = u;
        return w > v ? w - 1 : w;
    };
    for (int f = 0; f < g.edge_count(); ++f) {
        if (f == e) continue;
        auto [a, b] = g.edge(f);
        int x = map_vertex(a), y = map_vertex(b);
        if (x > y) std::swap(x, y);
        edges.emplace(x, y);  // parallel edges collapse here
    }
    return Graph::build(g.vertex_count() - 1, {edges.begin(), edges.end()});
}

Graph realization_a(int a, int b) {
    if (b < 2 || a < 2 * b)
        throw std::invalid_argument("realization_a requires a >= 2b and b >= 2");
    Graph f = generate({FamilyKind::friendship, {b}});
    std::vector<std::pair<int, int>> edges = f.edges();
    int next = f.vertex_count();
    for (int i = 0; i < a - 2 * b; ++i) edges.emplace_back(0, next++);
    return Graph::build(next, edges);
}

Graph realization_b(int a, int b) {
    if (b < 2 || a < b)
        throw std::invalid_argument("realization_b requires a >= b >= 2");
    Graph s = generate({FamilyKind::star, {a}});
    std::vector<std::pair<int, int>> edges = s.edges();
    int next = s.vertex_count();
    for (int leaf = 1; leaf <= b; ++leaf) edges.emplace_back(leaf, next++);
    return Graph::build(next, edges);
}

}  // namespace domedge
