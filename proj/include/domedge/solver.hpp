#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domedge/coloring.hpp"
#include "domedge/graph.hpp"

namespace domedge {

struct SolveBudget {
    long long node_cap = 10'000'000;
    double time_limit_s = 60.0;
};

enum class SolveStatus { exact, incomplete };

struct SearchStats {
    long long nodes = 0;
    double elapsed_s = 0.0;
    SolveStatus status = SolveStatus::exact;
    bool node_cap_hit = false;
    bool time_cap_hit = false;
};

struct SolveResult {
    int value = 0;  // best dominated edge coloring found; optimal iff exact
    EdgeColoring coloring;
    DominationCertificate certificate;
    std::map<std::string, int> lower_bounds;  // half_m, delta, induced_path, overall
    int singleton_classes = 0;                // size-1 classes in `coloring`
    SearchStats stats;
};

struct DominationResult {
    int gamma_prime = 0;
    // Empty when total edge domination is infeasible (an edge with no
    // adjacent edge can never be dominated).
    std::optional<int> gamma_t_prime;
    std::vector<int> gamma_witness;
    std::vector<int> gamma_t_witness;
};

// Bitset view of the line graph plus the pair-compatibility relation.
// Two edges may share a color iff they are non-adjacent and some third
// edge is adjacent to both; a color class is always allowed as a
// singleton (an edge dominates itself under closed neighborhoods).
class PairTable {
public:
    static constexpr int max_edges = 64;

    explicit PairTable(const Graph& g);  // throws if edge_count > max_edges

    int edge_count() const { return m_; }
    std::uint64_t adjacent_mask(int e) const { return adjacent_[e]; }
    std::uint64_t compatible_mask(int e) const { return compatible_[e]; }
    bool compatible(int e, int f) const {
        return (compatible_[e] >> f) & 1u;
    }

private:
    int m_ = 0;
    std::vector<std::uint64_t> adjacent_;
    std::vector<std::uint64_t> compatible_;
};

// Lower bounds on the dominated edge chromatic number:
//   half_m       = ceil(m/2)         (every color is used at most twice)
//   delta        = max degree        (edges at one vertex get distinct colors)
//   induced_path = delta + value(P_{p-4}) for the longest induced path on
//                  p >= 7 vertices found within the cap, else 0
//   overall      = max of the above
std::map<std::string, int> lower_bounds(const Graph& g, int induced_path_cap = 10);

// Greedy pairing in branching order followed by a deterministic
// rematch pass; always returns a valid dominated coloring.
std::pair<int, EdgeColoring> greedy_upper(const Graph& g);

// Exact branch-and-bound. Branches over edges in a fixed order (descending
// open-neighborhood size, ties by index), assigning each edge to a
// compatible existing singleton class or to a new class; class ids are
// opened in increasing order. Returns status incomplete with the best
// incumbent when the budget runs out, never a silently unproven value.
SolveResult chi_dom_exact(const Graph& g, const SolveBudget& budget = {},
                          int induced_path_cap = 10);

// Independent oracle: minimum class count over every partition of the edge
// set into singletons and compatible pairs, enumerated exhaustively with no
// pruning; the winning partition is re-validated through the coloring
// module. Throws std::invalid_argument when edge_count > edge_cap.
int chi_dom_brute_oracle(const Graph& g, int edge_cap = 12);

// Same enumeration, additionally reporting the minimum number of singleton
// classes among optimal partitions and one optimal coloring attaining it.
struct OracleResult {
    int value = 0;
    int min_singletons = 0;
    EdgeColoring coloring;
};
OracleResult chi_dom_oracle_detail(const Graph& g, int edge_cap = 12);

// Exact edge domination and total edge domination numbers by subset
// enumeration in increasing size; witnesses are lexicographically least.
DominationResult gamma_numbers(const Graph& g);

}  // namespace domedge
