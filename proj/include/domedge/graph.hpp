#pragma once

#include <string>
#include <utility>
#include <vector>

namespace domedge {

// Simple undirected graph in canonical form: the edge list is sorted
// lexicographically with u < v per edge and contains no duplicates.
// Edge indices refer to that order everywhere in the library (colorings,
// certificates, file formats), so two graphs built from the same edge set
// are bit-identical.
class Graph {
public:
    Graph() = default;

    // Validates and canonicalizes. Throws std::invalid_argument on a
    // self-loop, an out-of-range endpoint or a duplicate edge (duplicates
    // signal malformed input and are rejected, not merged).
    static Graph build(int n, std::vector<std::pair<int, int>> edge_pairs);
    static Graph build(int n, std::vector<std::pair<int, int>> edge_pairs,
                       std::vector<std::string> labels);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int e) const;

    // Index of edge {u,v} in canonical order, or -1 if absent.
    int edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    std::vector<int> degrees() const;
    int max_degree() const;

    // Edges sharing an endpoint with e (open neighborhood in the line
    // graph), sorted by edge index.
    const std::vector<int>& edge_neighbors(int e) const;

    // Open or closed edge neighborhood as a sorted list of edge indices.
    std::vector<int> edge_neighborhood(int e, bool closed) const;

    bool edges_adjacent(int e, int f) const;

    // Labels are metadata only (the subdivision operator names its internal
    // vertices); they never affect semantics. Empty string when unset.
    const std::string& label(int v) const;
    bool has_labels() const { return !labels_.empty(); }

private:
    void check_vertex(int v) const;
    void check_edge(int e) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::vector<int>> edge_adjacency_;
    std::vector<std::string> labels_;
};

struct StructureReport {
    bool connected = false;
    std::vector<int> cut_vertices;
    std::vector<int> bridges;  // edge indices
    int max_degree = 0;
    // Largest p <= cap such that the path on p vertices is an induced
    // subgraph; 0 when the search is disabled (cap == 0).
    int longest_induced_path_vertices = 0;
};

// Connectivity by traversal, cut vertices and bridges by low-link DFS,
// longest induced path by exhaustive backtracking with chord checks
// (bounded by induced_path_cap vertices).
StructureReport structure_report(const Graph& g, int induced_path_cap);

int component_count(const Graph& g);

}  // namespace domedge
