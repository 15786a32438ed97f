#pragma once

#include <string>
#include <vector>

#include "domedge/graph.hpp"

namespace domedge {

enum class FamilyKind {
    path,               // P_n, n >= 1 vertices
    cycle,              // C_n, n >= 3
    complete,           // K_n, n >= 1
    complete_bipartite, // K_{r,s}, r,s >= 1
    star,               // K_{1,k}, k >= 1 leaves
    bistar,             // B_{p,q}, p,q >= 1 leaves per center
    wheel,              // W_n: hub + C_{n-1}, n >= 4 vertices total
    friendship,         // F_n: n triangles sharing one vertex, n >= 1
};

struct FamilySpec {
    FamilyKind kind;
    std::vector<int> params;
};

// Parses a family name ("path", "wheel", ...) and validates the parameter
// list against the family's range. Throws std::invalid_argument.
FamilySpec make_family_spec(const std::string& name, const std::vector<int>& params);

const char* family_name(FamilyKind kind);
std::string describe(const FamilySpec& spec);  // e.g. "path(5)"

// Vertex 0 is the center/hub for star, wheel and friendship.
Graph generate(const FamilySpec& spec);

// G + H: disjoint union plus all edges between the two vertex sets.
Graph join(const Graph& g, const Graph& h);

// G o H: one copy of H per vertex of G, each vertex joined to its copy.
Graph corona(const Graph& g, const Graph& h);

// Replaces each edge by a path of length k; k == 1 returns G unchanged.
// Internal vertices are labeled x_l^{u,v}, l counted from the smaller
// endpoint, and appended after the original vertices in canonical edge
// order.
Graph subdivide(const Graph& g, int k);

Graph remove_vertex(const Graph& g, int v);
Graph remove_edge(const Graph& g, int e);

// Simple-graph quotient: endpoints merged, parallel edges collapsed.
Graph contract_edge(const Graph& g, int e);

// Friendship graph F_b with a-2b pendant edges at the center (a >= 2b, b >= 2).
Graph realization_a(int a, int b);

// Star K_{1,a} with one pendant edge added to each of b leaves (a >= b >= 2).
Graph realization_b(int a, int b);

}  // namespace domedge
