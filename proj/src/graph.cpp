#include "domedge/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace domedge {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::build(int n, std::vector<std::pair<int, int>> edge_pairs) {
    return build(n, std::move(edge_pairs), {});
}

Graph Graph::build(int n, std::vector<std::pair<int, int>> edge_pairs,
                   std::vector<std::string> labels) {
    if (n < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("label list must match vertex count");

    for (auto& [u, v] : edge_pairs) {
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + edge_str(u, v));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edge_pairs.begin(), edge_pairs.end());
    for (size_t i = 1; i < edge_pairs.size(); ++i) {
        if (edge_pairs[i] == edge_pairs[i - 1])
            throw std::invalid_argument(
                "duplicate edge " + edge_str(edge_pairs[i].first, edge_pairs[i].second));
    }

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edge_pairs);
    g.labels_ = std::move(labels);

    const int m = g.edge_count();
    g.adjacency_.assign(n, {});
    std::vector<std::vector<int>> incident(n);  // edge indices at each vertex
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges_[e];
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
        incident[u].push_back(e);
        incident[v].push_back(e);
    }
    for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());

    g.edge_adjacency_.assign(m, {});
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges_[e];
        auto& out = g.edge_adjacency_[e];
        for (int f : incident[u])
            if (f != e) out.push_back(f);
        for (int f : incident[v])
            if (f != e) out.push_back(f);
        std::sort(out.begin(), out.end());
    }
    return g;
}

std::pair<int, int> Graph::edge(int e) const {
    check_edge(e);
    return edges_[e];
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it != edges_.end() && *it == std::make_pair(u, v))
        return static_cast<int>(it - edges_.begin());
    return -1;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adjacency_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adjacency_[v].size());
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = static_cast<int>(adjacency_[v].size());
    return d;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nb : adjacency_) best = std::max(best, static_cast<int>(nb.size()));
    return best;
}

const std::vector<int>& Graph::edge_neighbors(int e) const {
    check_edge(e);
    return edge_adjacency_[e];
}

std::vector<int> Graph::edge_neighborhood(int e, bool closed) const {
    check_edge(e);
    std::vector<int> out = edge_adjacency_[e];
    if (closed) {
        out.insert(std::lower_bound(out.begin(), out.end(), e), e);
    }
    return out;
}

bool Graph::edges_adjacent(int e, int f) const {
    check_edge(e);
    check_edge(f);
    if (e == f) return false;
    auto [u, v] = edges_[e];
    auto [x, y] = edges_[f];
    return u == x || u == y || v == x || v == y;
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    static const std::string empty;
    return labels_.empty() ? empty : labels_[v];
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex index out of range: " + std::to_string(v));
}

void Graph::check_edge(int e) const {
    if (e < 0 || e >= edge_count())
        throw std::invalid_argument("edge index out of range: " + std::to_string(e));
}

}  // namespace domedge
